#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "kmosaic/errors.hpp"
#include "kmosaic/tiles.hpp"

namespace kmosaic {

struct position {
  int row = 0;
  int col = 0;
  friend constexpr auto operator<=>(position, position) = default;
};

inline std::ostream& operator<<(std::ostream& os, position p) {
  return os << '(' << p.row << ", " << p.col << ')';
}

// A square matrix of tile labels. Immutable value type: transforming
// operations return new mosaics.
class mosaic {
 public:
  explicit mosaic(const std::vector<std::vector<int>>& rows) {
    n_ = static_cast<int>(rows.size());
    if (n_ == 0) throw not_square_error("a mosaic needs at least one row");
    tiles_.reserve(static_cast<std::size_t>(n_) * n_);
    for (int r = 0; r < n_; ++r) {
      if (static_cast<int>(rows[r].size()) != n_)
        throw not_square_error("row " + std::to_string(r) + " has " +
                               std::to_string(rows[r].size()) + " entries, expected " +
                               std::to_string(n_));
      for (int c = 0; c < n_; ++c) {
        const int v = rows[r][c];
        if (v < 0 || v >= tile_count) throw bad_tile_error(v, r, c);
        tiles_.push_back(static_cast<tile_id>(v));
      }
    }
  }

  mosaic(std::initializer_list<std::vector<int>> rows)
      : mosaic(std::vector<std::vector<int>>(rows)) {}

  // Takes ownership of a prevalidated row-major tile vector.
  mosaic(int n, std::vector<tile_id> tiles) : n_(n), tiles_(std::move(tiles)) {}

  static mosaic blank(int n) { return mosaic(n, std::vector<tile_id>(std::size_t(n) * n, 0)); }

  int dimension() const noexcept { return n_; }

  bool in_bounds(position p) const noexcept {
    return p.row >= 0 && p.row < n_ && p.col >= 0 && p.col < n_;
  }

  tile_id at(position p) const { return tiles_[static_cast<std::size_t>(p.row) * n_ + p.col]; }
  tile_id at(int row, int col) const { return tiles_[static_cast<std::size_t>(row) * n_ + col]; }

  const mosaic_tile& spec_at(position p) const { return tile_spec(at(p)); }

  mosaic with_tile(position p, tile_id t) const {
    std::vector<tile_id> copy = tiles_;
    copy[static_cast<std::size_t>(p.row) * n_ + p.col] = t;
    return mosaic(n_, std::move(copy));
  }

  const std::vector<tile_id>& tiles() const noexcept { return tiles_; }

  friend bool operator==(const mosaic&, const mosaic&) = default;

 private:
  int n_;
  std::vector<tile_id> tiles_;
};

inline std::ostream& operator<<(std::ostream& os, const mosaic& m) {
  os << "mosaic(" << m.dimension() << ")[";
  for (std::size_t i = 0; i < m.tiles().size(); ++i)
    os << (i ? "," : "") << int(m.tiles()[i]);
  return os << ']';
}

// True when every connection point of every tile meets a matching connection
// point on the adjacent tile and none faces the mosaic boundary.
inline bool is_suitably_connected(const mosaic& m) {
  const int n = m.dimension();
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const mosaic_tile& t = tile_spec(m.at(r, c));
      for (side s : all_sides) {
        if (!t.connects(s)) continue;
        const position q{r + row_offset(s), c + col_offset(s)};
        if (!m.in_bounds(q)) return false;
        if (!m.spec_at(q).connects(opposite(s))) return false;
      }
    }
  }
  return true;
}

// Positions of crossing tiles in row-major order.
inline std::vector<position> find_crossings(const mosaic& m) {
  std::vector<position> out;
  const int n = m.dimension();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (tile_spec(m.at(r, c)).crossing) out.push_back({r, c});
  return out;
}

// Counts crossing tiles in the diagram, not the crossing number of the
// represented knot.
inline int number_of_crossings(const mosaic& m) {
  return static_cast<int>(find_crossings(m).size());
}

// Mirror image across a vertical axis: columns reversed, each tile replaced
// by its reflection. Involution.
inline mosaic flip(const mosaic& m) {
  const int n = m.dimension();
  std::vector<tile_id> tiles(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      tiles[static_cast<std::size_t>(r) * n + c] = reflect_h(m.at(r, n - 1 - c));
  return mosaic(n, std::move(tiles));
}

struct boundary_point {
  position pos;
  side s;
  friend constexpr auto operator<=>(boundary_point, boundary_point) = default;
};

// Connection points that face the edge of the grid. A suitably connected
// mosaic has none; a clean tangle has exactly four.
inline std::vector<boundary_point> boundary_endpoints(const mosaic& m) {
  std::vector<boundary_point> out;
  const int n = m.dimension();
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const mosaic_tile& t = tile_spec(m.at(r, c));
      for (side s : all_sides)
        if (t.connects(s) && !m.in_bounds({r + row_offset(s), c + col_offset(s)}))
          out.push_back({{r, c}, s});
    }
  }
  return out;
}

// A row-major prefix of tile placements, used while growing a mosaic cell by
// cell.
class partial_mosaic {
 public:
  explicit partial_mosaic(int n) : n_(n) { placed_.reserve(std::size_t(n) * n); }

  int dimension() const noexcept { return n_; }
  std::size_t placed() const noexcept { return placed_.size(); }
  bool complete() const noexcept { return placed_.size() == std::size_t(n_) * n_; }

  position frontier() const {
    const int i = static_cast<int>(placed_.size());
    return {i / n_, i % n_};
  }

  tile_id at(int row, int col) const { return placed_[static_cast<std::size_t>(row) * n_ + col]; }

  void push(tile_id t) {
    if (complete()) throw error("all positions are already placed");
    placed_.push_back(t);
  }
  void pop() { placed_.pop_back(); }

  mosaic to_mosaic() const { return mosaic(n_, placed_); }

 private:
  int n_;
  std::vector<tile_id> placed_;
};

// The tiles that may legally be placed at the next row-major position: their
// top and left connection points must agree with the already-placed
// neighbors, and no connection point may face the boundary.
inline std::vector<tile_id> potential_tiles(const partial_mosaic& p, int row, int col) {
  if (position{row, col} != p.frontier())
    throw out_of_order_error("potential tiles queried at (" + std::to_string(row) + ", " +
                             std::to_string(col) + ") but the frontier is elsewhere");
  const int n = p.dimension();
  const bool need_top = row > 0 && tile_spec(p.at(row - 1, col)).connects(side::bottom);
  const bool need_left = col > 0 && tile_spec(p.at(row, col - 1)).connects(side::right);
  std::vector<tile_id> out;
  for (int t = 0; t < tile_count; ++t) {
    const mosaic_tile& spec = tile_table[t];
    if (spec.connects(side::top) != need_top) continue;
    if (spec.connects(side::left) != need_left) continue;
    if (row == n - 1 && spec.connects(side::bottom)) continue;
    if (col == n - 1 && spec.connects(side::right)) continue;
    out.push_back(static_cast<tile_id>(t));
  }
  return out;
}

inline std::vector<tile_id> potential_tiles(const partial_mosaic& p) {
  const position f = p.frontier();
  return potential_tiles(p, f.row, f.col);
}

}  // namespace kmosaic
