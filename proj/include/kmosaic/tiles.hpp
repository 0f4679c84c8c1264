#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "kmosaic/errors.hpp"

namespace kmosaic {

// Sides of a tile. The order (top, right, bottom, left) is the fixed
// iteration order used for every deterministic enumeration in the library.
enum class side : std::uint8_t { top = 0, right = 1, bottom = 2, left = 3 };

// Directions of motion on the grid. Rows grow downward, so moving up
// decreases the row index and moving right increases the column index.
enum class direction : std::uint8_t { up = 0, right = 1, down = 2, left = 3 };

inline constexpr std::array<side, 4> all_sides{side::top, side::right, side::bottom, side::left};

constexpr int index_of(side s) noexcept { return static_cast<int>(s); }

constexpr side opposite(side s) noexcept {
  constexpr std::array<side, 4> table{side::bottom, side::left, side::top, side::right};
  return table[index_of(s)];
}

constexpr direction opposite(direction d) noexcept {
  constexpr std::array<direction, 4> table{direction::down, direction::left, direction::up,
                                           direction::right};
  return table[static_cast<int>(d)];
}

// The side a strand exits through when it leaves a tile moving in direction d.
constexpr side as_side(direction d) noexcept { return static_cast<side>(d); }

constexpr direction as_direction(side s) noexcept { return static_cast<direction>(s); }

// Entering a tile while moving in direction d means crossing its border on
// the side facing the previous tile.
constexpr side entry_side(direction motion) noexcept { return opposite(as_side(motion)); }

constexpr int row_offset(side s) noexcept {
  return s == side::top ? -1 : s == side::bottom ? 1 : 0;
}

constexpr int col_offset(side s) noexcept {
  return s == side::left ? -1 : s == side::right ? 1 : 0;
}

constexpr const char* name_of(side s) noexcept {
  constexpr std::array<const char*, 4> names{"top", "right", "bottom", "left"};
  return names[index_of(s)];
}

constexpr const char* name_of(direction d) noexcept {
  constexpr std::array<const char*, 4> names{"up", "right", "down", "left"};
  return names[static_cast<int>(d)];
}

// An unordered pair of tile sides, normalized so that lo precedes hi in the
// (top, right, bottom, left) order.
struct side_pair {
  side lo;
  side hi;

  constexpr side_pair(side a, side b) noexcept
      : lo(index_of(a) <= index_of(b) ? a : b), hi(index_of(a) <= index_of(b) ? b : a) {}

  constexpr bool contains(side s) const noexcept { return s == lo || s == hi; }
  constexpr side partner(side s) const noexcept { return s == lo ? hi : lo; }
  friend constexpr bool operator==(side_pair, side_pair) = default;
};

using tile_id = std::uint8_t;

inline constexpr int tile_count = 11;

// The strand axis a crossing draws on top.
enum class axis : std::uint8_t { vertical, horizontal };

// The eleven standard tiles by number: a blank, four quarter-circle arcs,
// two straight lines, two double arcs, and two crossings.
namespace tile {
inline constexpr tile_id blank = 0;
inline constexpr tile_id arc_lb = 1;       // left-bottom arc
inline constexpr tile_id arc_rb = 2;       // right-bottom arc
inline constexpr tile_id arc_tr = 3;       // top-right arc
inline constexpr tile_id arc_tl = 4;       // top-left arc
inline constexpr tile_id line_lr = 5;      // horizontal line
inline constexpr tile_id line_tb = 6;      // vertical line
inline constexpr tile_id arcs_tr_bl = 7;   // double arc: top-right and bottom-left
inline constexpr tile_id arcs_tl_br = 8;   // double arc: top-left and bottom-right
inline constexpr tile_id crossing_h = 9;   // crossing, horizontal strand on top
inline constexpr tile_id crossing_v = 10;  // crossing, vertical strand on top
}  // namespace tile

// Local data of a single standard tile: which sides carry connection points,
// how those sides pair up into strands, and crossing information.
struct mosaic_tile {
  tile_id id;
  std::uint8_t connection_mask;        // bit i set when all_sides[i] is a connection point
  std::array<side_pair, 2> strands;    // strands[0..strand_count)
  std::uint8_t strand_count;
  bool crossing;
  axis over;                           // meaningful only when crossing

  constexpr bool connects(side s) const noexcept {
    return (connection_mask >> index_of(s)) & 1u;
  }

  constexpr int connection_count() const noexcept {
    int n = 0;
    for (side s : all_sides) n += connects(s) ? 1 : 0;
    return n;
  }

  // Index into strands of the strand containing s, or -1.
  constexpr int strand_index(side s) const noexcept {
    for (int k = 0; k < strand_count; ++k)
      if (strands[k].contains(s)) return k;
    return -1;
  }
};

namespace detail {

constexpr std::uint8_t mask_of(side a, side b) noexcept {
  return static_cast<std::uint8_t>((1u << index_of(a)) | (1u << index_of(b)));
}

constexpr mosaic_tile make_blank() noexcept {
  return {tile::blank, 0, {side_pair{side::top, side::top}, side_pair{side::top, side::top}}, 0,
          false, axis::vertical};
}

constexpr mosaic_tile make_arc(tile_id id, side a, side b) noexcept {
  return {id, mask_of(a, b), {side_pair{a, b}, side_pair{a, b}}, 1, false, axis::vertical};
}

constexpr mosaic_tile make_double(tile_id id, side_pair p, side_pair q) noexcept {
  return {id, static_cast<std::uint8_t>(0xF), {p, q}, 2, false, axis::vertical};
}

constexpr mosaic_tile make_crossing(tile_id id, axis over) noexcept {
  return {id,
          static_cast<std::uint8_t>(0xF),
          {side_pair{side::top, side::bottom}, side_pair{side::left, side::right}},
          2,
          true,
          over};
}

}  // namespace detail

// Canonical tile table. Strand pairs are listed with the (top, bottom) strand
// before the (left, right) strand on crossings, and in (top, right, bottom,
// left)-lexicographic order on double arcs, which fixes the order strands are
// discovered in during traversal.
inline constexpr std::array<mosaic_tile, tile_count> tile_table{
    detail::make_blank(),
    detail::make_arc(tile::arc_lb, side::left, side::bottom),
    detail::make_arc(tile::arc_rb, side::right, side::bottom),
    detail::make_arc(tile::arc_tr, side::top, side::right),
    detail::make_arc(tile::arc_tl, side::top, side::left),
    detail::make_arc(tile::line_lr, side::left, side::right),
    detail::make_arc(tile::line_tb, side::top, side::bottom),
    detail::make_double(tile::arcs_tr_bl, side_pair{side::top, side::right},
                        side_pair{side::bottom, side::left}),
    detail::make_double(tile::arcs_tl_br, side_pair{side::top, side::left},
                        side_pair{side::bottom, side::right}),
    detail::make_crossing(tile::crossing_h, axis::horizontal),
    detail::make_crossing(tile::crossing_v, axis::vertical),
};

constexpr const mosaic_tile& tile_spec(tile_id id) noexcept { return tile_table[id]; }

// Follow the local strand through a tile: entering through `entry` leaves
// through the partner side of the pairing containing `entry`. Involution on
// each tile's connection set.
inline side traverse_tile(tile_id id, side entry) {
  const mosaic_tile& t = tile_spec(id);
  const int k = t.strand_index(entry);
  if (k < 0)
    throw no_connection_error("tile " + std::to_string(int(id)) + " has no connection point on its " +
                              name_of(entry) + " side");
  return t.strands[k].partner(entry);
}

// The tile whose picture is the mirror image across a vertical axis.
constexpr tile_id reflect_h(tile_id id) noexcept {
  constexpr std::array<tile_id, tile_count> table{0, 2, 1, 4, 3, 5, 6, 8, 7, 9, 10};
  return table[id];
}

// The two double-arc tiles obtained by smoothing a crossing, as the pair
// (A-smoothing, B-smoothing). The A-smoothing opens the two regions swept by
// rotating the over-strand counterclockwise onto the under-strand, so the
// horizontal-over crossing smooths to the top-left/bottom-right arcs first
// and the vertical-over crossing to the top-right/bottom-left arcs first.
inline std::pair<tile_id, tile_id> smoothing_tiles(tile_id id) {
  if (id == tile::crossing_h) return {tile::arcs_tl_br, tile::arcs_tr_bl};
  if (id == tile::crossing_v) return {tile::arcs_tr_bl, tile::arcs_tl_br};
  throw not_a_crossing_error("tile " + std::to_string(int(id)) + " is not a crossing");
}

}  // namespace kmosaic
