#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kmosaic/errors.hpp"
#include "kmosaic/laurent.hpp"
#include "kmosaic/mosaic.hpp"
#include "kmosaic/pdcode.hpp"
#include "kmosaic/tiles.hpp"
#include "kmosaic/traversal.hpp"

namespace kmosaic {

// Each extra crossing doubles the state sum; the default keeps worst-case
// evaluation around a million states.
inline constexpr int default_crossing_cap = 20;

namespace detail {

// Motion vectors in mathematical orientation (y grows upward), used for
// crossing signs.
struct motion_vec {
  int dx;
  int dy;
};

constexpr motion_vec vector_of(direction d) noexcept {
  switch (d) {
    case direction::up: return {0, 1};
    case direction::right: return {1, 0};
    case direction::down: return {0, -1};
    case direction::left: return {-1, 0};
  }
  return {0, 0};
}

// The direction of each pass through each crossing, indexed by strand axis,
// under the orientations induced by the canonical traces.
inline std::map<position, std::array<direction, 2>> crossing_pass_motions(const mosaic& m) {
  std::map<position, std::array<direction, 2>> out;
  for (const component_trace& trace : strands(m)) {
    for (const step& s : trace) {
      if (!m.spec_at(s.pos).crossing) continue;
      const side entry = entry_side(s.motion);
      const axis a =
          (entry == side::top || entry == side::bottom) ? axis::vertical : axis::horizontal;
      out[s.pos][static_cast<int>(a)] = s.motion;
    }
  }
  return out;
}

}  // namespace detail

// Signed crossing count of the diagram, with components oriented by their
// canonical traces. A crossing is positive when the frame (over-strand
// motion, under-strand motion) is positively oriented in the plane.
inline int writhe(const mosaic& m) {
  int total = 0;
  for (const auto& [pos, motions] : detail::crossing_pass_motions(m)) {
    const axis over = m.spec_at(pos).over;
    const axis under = over == axis::vertical ? axis::horizontal : axis::vertical;
    const detail::motion_vec o = detail::vector_of(motions[static_cast<int>(over)]);
    const detail::motion_vec u = detail::vector_of(motions[static_cast<int>(under)]);
    total += (o.dx * u.dy - o.dy * u.dx) > 0 ? 1 : -1;
  }
  return total;
}

// Kauffman bracket by state sum: over all assignments of an A- or
// B-smoothing to every crossing, sum A^(a-b) * delta^(loops-1), where delta
// = -A^2 - A^(-2) and loops counts the circles of the fully smoothed mosaic.
// A mosaic with no strands at all has bracket 1.
inline bracket_poly kauffman_bracket(const mosaic& m, int max_crossings = default_crossing_cap) {
  if (!is_suitably_connected(m))
    throw not_suitably_connected_error("the bracket requires a suitably connected mosaic");
  const std::vector<position> crossings = find_crossings(m);
  const int c = static_cast<int>(crossings.size());
  constexpr int hard_cap = 30;  // state masks are 32-bit
  if (c > max_crossings || c > hard_cap)
    throw too_many_crossings_error(c, max_crossings < hard_cap ? max_crossings : hard_cap);

  const bracket_poly delta = bracket_poly::monomial(2, -1) + bracket_poly::monomial(-2, -1);
  std::vector<bracket_poly> delta_pow{bracket_poly::constant(1)};
  const auto delta_power = [&](int k) -> const bracket_poly& {
    while (static_cast<int>(delta_pow.size()) <= k) delta_pow.push_back(delta_pow.back() * delta);
    return delta_pow[static_cast<std::size_t>(k)];
  };

  const int n = m.dimension();
  bracket_poly total;
  for (std::uint32_t state = 0; state < (std::uint32_t(1) << c); ++state) {
    std::vector<tile_id> tiles = m.tiles();
    int b_count = 0;
    for (int i = 0; i < c; ++i) {
      const auto [a_tile, b_tile] = smoothing_tiles(m.at(crossings[i]));
      const bool use_b = (state >> i) & 1u;
      b_count += use_b ? 1 : 0;
      tiles[std::size_t(crossings[i].row) * n + crossings[i].col] = use_b ? b_tile : a_tile;
    }
    const int loops = number_of_components(mosaic(n, std::move(tiles)));
    if (loops == 0) return bracket_poly::constant(1);  // only possible for a blank mosaic
    total += bracket_poly::monomial(c - 2 * b_count, 1) * delta_power(loops - 1);
  }
  return total;
}

// Jones polynomial (-A)^(-3w) * <M> after the substitution A = t^(-1/4),
// returned with exponents in quarter units of t. For one-component mosaics
// every exponent is a whole power of t.
inline jones_poly jones_polynomial(const mosaic& m, int max_crossings = default_crossing_cap) {
  const bracket_poly bracket = kauffman_bracket(m, max_crossings);
  const int w = writhe(m);
  const long long sign = (w % 2 == 0) ? 1 : -1;  // (-1)^w from (-A)^(-3w)
  jones_poly out;
  for (const auto& [e, coeff] : bracket.terms())
    out += jones_poly::monomial(3 * w - e, sign * coeff);
  return out;
}

enum class unknot_method { no_crossings, jones_heuristic, external_oracle };

constexpr const char* name_of(unknot_method m) noexcept {
  switch (m) {
    case unknot_method::no_crossings: return "no_crossings";
    case unknot_method::jones_heuristic: return "jones_heuristic";
    case unknot_method::external_oracle: return "external_oracle";
  }
  return "";
}

struct unknot_verdict {
  bool result;
  unknot_method method;
  friend constexpr bool operator==(unknot_verdict, unknot_verdict) = default;
};

// An oracle maps a planar diagram code to the total rank of a detecting
// homology theory; rank one certifies the unknot. Implementations should
// throw oracle_error on failure.
using rank_oracle = std::function<long long(const pd_code&)>;

// Unknot detection for one-component mosaics. Crossing-free mosaics are
// unknots outright. With an oracle the verdict is certified; without one a
// trivial Jones polynomial is reported as a heuristic verdict only.
inline unknot_verdict is_unknot(const mosaic& m, const rank_oracle& oracle = {},
                                int max_crossings = default_crossing_cap) {
  if (number_of_components(m) != 1)
    throw not_one_component_error("unknot detection requires a one-component mosaic");
  if (number_of_crossings(m) == 0) return {true, unknot_method::no_crossings};
  if (oracle) return {oracle(planar_diagram_code(m)) == 1, unknot_method::external_oracle};
  return {jones_polynomial(m, max_crossings).is_one(), unknot_method::jones_heuristic};
}

// Necessary-but-not-sufficient isotopy check: component counts and Jones
// polynomials must agree. A false result certifies the mosaics differ; a
// true result does not certify they match.
inline bool possibly_isotopic(const mosaic& a, const mosaic& b,
                              int max_crossings = default_crossing_cap) {
  if (number_of_components(a) != number_of_components(b)) return false;
  return jones_polynomial(a, max_crossings) == jones_polynomial(b, max_crossings);
}

}  // namespace kmosaic
