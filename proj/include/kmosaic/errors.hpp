#pragma once

#include <stdexcept>
#include <string>

namespace kmosaic {

// Base class for all domain errors raised by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct not_square_error : error {
  using error::error;
};

struct bad_tile_error : error {
  bad_tile_error(long long value, int row, int col)
      : error("tile value " + std::to_string(value) + " at (" + std::to_string(row) + ", " +
              std::to_string(col) + ") is outside 0..10"),
        value(value), row(row), col(col) {}
  long long value;
  int row;
  int col;
};

// traverse_tile was asked to enter a tile through a side it does not connect.
struct no_connection_error : error {
  using error::error;
};

struct not_a_crossing_error : error {
  using error::error;
};

// potential_tiles was queried at a position other than the row-major frontier.
struct out_of_order_error : error {
  using error::error;
};

struct not_suitably_connected_error : error {
  using error::error;
};

// A traversal was started through a side the local tile does not connect.
struct no_strand_error : error {
  using error::error;
};

// A strand ran off the edge of the grid (possible only on tangles and other
// mosaics that are not suitably connected).
struct boundary_exit_error : error {
  using error::error;
};

struct too_many_crossings_error : error {
  too_many_crossings_error(int crossings, int cap)
      : error("mosaic has " + std::to_string(crossings) + " crossings, above the cap of " +
              std::to_string(cap)),
        crossings(crossings), cap(cap) {}
  int crossings;
  int cap;
};

struct not_one_component_error : error {
  using error::error;
};

struct oracle_error : error {
  using error::error;
};

struct attempts_exhausted_error : error {
  explicit attempts_exhausted_error(int attempts)
      : error("no mosaic satisfying the constraints was found in " + std::to_string(attempts) +
              " attempts"),
        attempts(attempts) {}
  int attempts;
};

struct zero_term_error : error {
  using error::error;
};

struct parse_error : error {
  parse_error(int line, std::string message)
      : error("line " + std::to_string(line) + ": " + message), line(line) {}
  int line;
};

}  // namespace kmosaic
