#pragma once

#include <array>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "kmosaic/errors.hpp"
#include "kmosaic/mosaic.hpp"
#include "kmosaic/tiles.hpp"

namespace kmosaic {

// One traversal state: the tile just arrived at and the direction of motion
// used to arrive, i.e. the tile was entered through the side facing the
// previous tile.
struct step {
  position pos;
  direction motion;
  friend constexpr bool operator==(step, step) = default;
};

inline std::ostream& operator<<(std::ostream& os, step s) {
  return os << s.pos << ' ' << name_of(s.motion);
}

// One strand segment inside one tile: arcs and lines carry one, double arcs
// and crossings carry two.
struct local_strand {
  position pos;
  side_pair pair;
  friend constexpr bool operator==(local_strand, local_strand) = default;
};

// A closed cyclic sequence of steps tracing one link component.
using component_trace = std::vector<step>;

namespace detail {

inline step move_across(const mosaic& m, position p, side exit) {
  const position q{p.row + row_offset(exit), p.col + col_offset(exit)};
  if (!m.in_bounds(q))
    throw boundary_exit_error("strand leaves the grid at (" + std::to_string(p.row) + ", " +
                              std::to_string(p.col) + ") through its " + name_of(exit) + " side");
  return {q, as_direction(exit)};
}

}  // namespace detail

// Follow the local strand through the tile at p entered while moving in
// direction `motion`, and return the arrival state in the adjacent tile.
inline step exit_path(const mosaic& m, position p, direction motion) {
  if (!m.in_bounds(p)) throw no_strand_error("position is outside the mosaic");
  const side entry = entry_side(motion);
  const mosaic_tile& t = m.spec_at(p);
  if (!t.connects(entry))
    throw no_strand_error("no strand enters (" + std::to_string(p.row) + ", " +
                          std::to_string(p.col) + ") moving " + name_of(motion));
  return detail::move_across(m, p, traverse_tile(m.at(p), entry));
}

// Trace the whole component through the strand leaving `start` in direction
// `motion`. The first step of the trace is the arrival in the adjacent tile;
// the trace closes just before that state recurs.
inline component_trace strand_of(const mosaic& m, position start, direction motion) {
  if (!m.in_bounds(start))
    throw no_strand_error("start position is outside the mosaic");
  const side exit = as_side(motion);
  if (!m.spec_at(start).connects(exit))
    throw no_strand_error("tile at (" + std::to_string(start.row) + ", " +
                          std::to_string(start.col) + ") has no connection point on its " +
                          name_of(exit) + " side");
  const step first = detail::move_across(m, start, exit);
  component_trace trace{first};
  const std::size_t limit = 2 * m.tiles().size() + 1;
  for (step cur = first;;) {
    cur = exit_path(m, cur.pos, cur.motion);
    if (cur == first) break;
    trace.push_back(cur);
    if (trace.size() > limit)
      throw error("strand trace failed to close");  // unreachable on well-formed input
  }
  return trace;
}

// All components in canonical order: repeatedly take the row-major-first
// tile owning an untraced strand, pick its first untraced strand pair, and
// trace outward along the pair's earlier side in (top, right, bottom, left)
// order. The traces partition the local strands of the mosaic.
inline std::vector<component_trace> strands(const mosaic& m) {
  if (!is_suitably_connected(m))
    throw not_suitably_connected_error("strands require a suitably connected mosaic");
  const int n = m.dimension();
  std::vector<std::array<bool, 2>> visited(m.tiles().size(), {false, false});
  std::vector<component_trace> out;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const mosaic_tile& t = m.spec_at({r, c});
      for (int k = 0; k < t.strand_count; ++k) {
        if (visited[std::size_t(r) * n + c][k]) continue;
        component_trace trace = strand_of(m, {r, c}, as_direction(t.strands[k].lo));
        for (const step& s : trace) {
          const mosaic_tile& u = m.spec_at(s.pos);
          const int j = u.strand_index(entry_side(s.motion));
          visited[std::size_t(s.pos.row) * n + s.pos.col][j] = true;
        }
        out.push_back(std::move(trace));
      }
    }
  }
  return out;
}

inline int number_of_components(const mosaic& m) {
  return static_cast<int>(strands(m).size());
}

// Positions visited from the crossing at c (inclusive), leaving in direction
// `motion`, up to the next crossing reached (inclusive).
inline std::vector<position> walk(const mosaic& m, position c, direction motion) {
  if (!m.in_bounds(c) || !m.spec_at(c).crossing)
    throw not_a_crossing_error("walks must start on a crossing tile");
  const side exit = as_side(motion);
  if (!m.spec_at(c).connects(exit))
    throw no_strand_error(std::string("crossing has no connection point on its ") + name_of(exit) + " side");
  std::vector<position> path{c};
  step cur = detail::move_across(m, c, exit);
  const std::size_t limit = 2 * m.tiles().size() + 1;
  for (;;) {
    path.push_back(cur.pos);
    if (m.spec_at(cur.pos).crossing) break;
    cur = exit_path(m, cur.pos, cur.motion);
    if (path.size() > limit) throw error("walk failed to reach a crossing");
  }
  return path;
}

// The terminal crossing of walk together with the direction of arrival there.
inline std::pair<position, direction> shift(const mosaic& m, position c, direction motion) {
  if (!m.in_bounds(c) || !m.spec_at(c).crossing)
    throw not_a_crossing_error("shifts must start on a crossing tile");
  const side exit = as_side(motion);
  if (!m.spec_at(c).connects(exit))
    throw no_strand_error(std::string("crossing has no connection point on its ") + name_of(exit) + " side");
  step cur = detail::move_across(m, c, exit);
  const std::size_t limit = 2 * m.tiles().size() + 1;
  std::size_t steps = 0;
  while (!m.spec_at(cur.pos).crossing) {
    cur = exit_path(m, cur.pos, cur.motion);
    if (++steps > limit) throw error("shift failed to reach a crossing");
  }
  return {cur.pos, cur.motion};
}

// Replace each tile by an isotopy-equivalent 3x3 block: the tile at the
// block center with straight connectors on its connection sides. In the
// result no two crossing tiles are adjacent.
inline mosaic zoom(const mosaic& m) {
  const int n = m.dimension();
  const int z = 3 * n;
  std::vector<tile_id> tiles(std::size_t(z) * z, tile::blank);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const mosaic_tile& t = m.spec_at({r, c});
      const int cr = 3 * r + 1;
      const int cc = 3 * c + 1;
      tiles[std::size_t(cr) * z + cc] = t.id;
      if (t.connects(side::left)) tiles[std::size_t(cr) * z + cc - 1] = tile::line_lr;
      if (t.connects(side::right)) tiles[std::size_t(cr) * z + cc + 1] = tile::line_lr;
      if (t.connects(side::top)) tiles[std::size_t(cr - 1) * z + cc] = tile::line_tb;
      if (t.connects(side::bottom)) tiles[std::size_t(cr + 1) * z + cc] = tile::line_tb;
    }
  }
  return mosaic(z, std::move(tiles));
}

}  // namespace kmosaic
