#pragma once

#include <cstdlib>
#include <vector>

#include "kmosaic/errors.hpp"
#include "kmosaic/mosaic.hpp"
#include "kmosaic/tiles.hpp"

namespace kmosaic {

// An integer twist count or the infinity tangle.
struct tangle_value {
  bool is_infinity = false;
  long long twists = 0;

  static tangle_value infinity() { return {true, 0}; }
  static tangle_value integer(long long k) { return {false, k}; }
  friend constexpr bool operator==(tangle_value, tangle_value) = default;
};

// Rational tangle mosaics. The infinity tangle is the single double-arc tile
// joining top-right and bottom-left, the zero tangle its mirror, and an
// integer k a |k| x |k| twist region: crossing tiles on the diagonal (tile 10
// for positive k, tile 9 for negative), arc tiles on the off-diagonals. The
// results are tangles, not suitably connected: each has exactly four
// connection points on the grid boundary.
inline mosaic rational_tangle(tangle_value v) {
  if (v.is_infinity) return mosaic(1, {tile::arcs_tr_bl});
  if (v.twists == 0) return mosaic(1, {tile::arcs_tl_br});
  const int size = static_cast<int>(v.twists < 0 ? -v.twists : v.twists);
  const tile_id crossing = v.twists > 0 ? tile::crossing_v : tile::crossing_h;
  std::vector<tile_id> tiles(std::size_t(size) * size, tile::blank);
  for (int i = 0; i < size; ++i) tiles[std::size_t(i) * size + i] = crossing;
  for (int i = 0; i + 1 < size; ++i) {
    tiles[std::size_t(i) * size + i + 1] = tile::arc_lb;
    tiles[std::size_t(i + 1) * size + i] = tile::arc_tr;
  }
  return mosaic(size, std::move(tiles));
}

inline mosaic rational_tangle(long long k) { return rational_tangle(tangle_value::integer(k)); }

// Join two integer tangles into one square tangle mosaic: the second twist
// region runs down the anti-diagonal of the top-right corner, the first sits
// as a diagonal block below it, and a connector row and column of line tiles
// tie the two regions together. Crossing tile type follows the sign of each
// term. The result has exactly four boundary connection points.
inline mosaic tangle_join(long long a, long long b) {
  if (a == 0 || b == 0) throw zero_term_error("tangle join terms must be nonzero");
  const int alpha = static_cast<int>(a < 0 ? -a : a);
  const int beta = static_cast<int>(b < 0 ? -b : b);
  const int n = alpha + beta;
  const tile_id cross_a = a > 0 ? tile::crossing_v : tile::crossing_h;
  const tile_id cross_b = b > 0 ? tile::crossing_v : tile::crossing_h;

  std::vector<tile_id> tiles(std::size_t(n) * n, tile::blank);
  const auto put = [&](int r, int c, tile_id t) { tiles[std::size_t(r) * n + c] = t; };

  // Second term: anti-diagonal twist region in the top-right corner.
  for (int r = 0; r < beta; ++r) put(r, n - 1 - r, cross_b);
  for (int r = 0; r + 1 < beta; ++r) {
    put(r, n - 2 - r, tile::arc_rb);
    put(r + 1, n - 1 - r, tile::arc_tl);
  }

  // Connector row feeding the last anti-diagonal crossing from the left edge.
  put(beta - 1, 0, tile::arc_rb);
  for (int c = 1; c < alpha; ++c) put(beta - 1, c, tile::line_lr);

  // First term: diagonal twist region in the bottom-left block.
  for (int i = 0; i < alpha; ++i) put(beta + i, i, cross_a);
  for (int i = 0; i + 1 < alpha; ++i) {
    put(beta + i, i + 1, tile::arc_lb);
    put(beta + i + 1, i, tile::arc_tr);
  }

  // Connector column closing the two regions on the other side.
  for (int i = 0; i + 1 < alpha; ++i) put(beta + i, alpha, tile::line_tb);
  put(n - 1, alpha, tile::arc_tl);

  return mosaic(n, std::move(tiles));
}

}  // namespace kmosaic
