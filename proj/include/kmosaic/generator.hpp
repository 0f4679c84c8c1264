#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "kmosaic/errors.hpp"
#include "kmosaic/invariants.hpp"
#include "kmosaic/mosaic.hpp"
#include "kmosaic/traversal.hpp"

namespace kmosaic {

// Deterministic source of uniform draws from finite sets. Randomness is
// consumed only through pick_index, so runs are reproducible from the seed
// across platforms.
class uniform_source {
 public:
  explicit uniform_source(std::uint64_t seed) : engine_(seed) {}

  // Uniform index in 0..size-1 via rejection sampling (no modulo bias).
  std::size_t pick_index(std::size_t size) {
    const std::uint64_t span = UINT64_MAX - UINT64_MAX % size;
    std::uint64_t draw;
    do {
      draw = engine_();
    } while (draw >= span);
    return static_cast<std::size_t>(draw % size);
  }

 private:
  std::mt19937_64 engine_;
};

struct generation_spec {
  int n = 1;
  bool suitably_connected = true;
  std::optional<int> crossings;   // exact crossing-tile count
  std::optional<int> components;  // exact component count
  bool unknot = false;
  std::uint64_t seed = 0;
  int max_attempts = 5000;
  rank_oracle oracle = {};  // consulted by the unknot constraint when set
  int max_crossings = default_crossing_cap;
};

namespace detail {

inline void validate(const generation_spec& spec) {
  if (spec.n < 1) throw error("mosaic dimension must be at least 1");
  if (spec.max_attempts < 1) throw error("max_attempts must be at least 1");
  if (spec.unknot && spec.components && *spec.components != 1)
    throw error("the unknot constraint requires a one-component mosaic");
  if (!spec.suitably_connected && (spec.crossings || spec.components || spec.unknot))
    throw error("constraints apply only to suitably connected generation");
}

inline bool satisfies(const mosaic& m, const generation_spec& spec) {
  if (spec.crossings && number_of_crossings(m) != *spec.crossings) return false;
  if (spec.components && number_of_components(m) != *spec.components) return false;
  if (spec.unknot) {
    if (number_of_components(m) != 1) return false;
    // Candidates above the state-sum cap are rejected rather than fatal.
    if (number_of_crossings(m) > spec.max_crossings) return false;
    if (!is_unknot(m, spec.oracle, spec.max_crossings).result) return false;
  }
  return true;
}

}  // namespace detail

// Rejection sampling of constrained mosaics. Each attempt fills the grid in
// row-major order, drawing uniformly from the locally valid tiles; an empty
// valid set abandons the attempt. The first completed mosaic satisfying all
// constraints is returned. With suitably_connected = false every cell is
// drawn uniformly from all eleven tiles and no constraints are checked.
inline mosaic random_mosaic(const generation_spec& spec) {
  detail::validate(spec);
  uniform_source rng(spec.seed);
  const std::size_t cells = std::size_t(spec.n) * spec.n;

  for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
    if (!spec.suitably_connected) {
      std::vector<tile_id> tiles(cells);
      for (tile_id& t : tiles) t = static_cast<tile_id>(rng.pick_index(tile_count));
      return mosaic(spec.n, std::move(tiles));
    }

    partial_mosaic partial(spec.n);
    bool dead_end = false;
    while (!partial.complete()) {
      const std::vector<tile_id> candidates = potential_tiles(partial);
      if (candidates.empty()) {
        dead_end = true;
        break;
      }
      partial.push(candidates[rng.pick_index(candidates.size())]);
    }
    if (dead_end) continue;

    mosaic m = partial.to_mosaic();
    if (!is_suitably_connected(m)) continue;  // cannot happen; local rule is sound
    if (detail::satisfies(m, spec)) return m;
  }
  throw attempts_exhausted_error(spec.max_attempts);
}

// Visit every suitably connected n-mosaic in lexicographic row-major tile
// order via depth-first backtracking. The visitor returns false to stop
// early; at most `limit` mosaics are visited when given. Returns the number
// visited.
inline std::uint64_t iterate_mosaics(int n, const std::function<bool(const mosaic&)>& visitor,
                                     std::optional<std::uint64_t> limit = {}) {
  if (n < 1) throw error("mosaic dimension must be at least 1");
  std::uint64_t visited = 0;
  partial_mosaic partial(n);
  bool stop = false;

  const std::function<void()> descend = [&]() {
    if (stop) return;
    if (partial.complete()) {
      ++visited;
      if (visitor && !visitor(partial.to_mosaic())) stop = true;
      if (limit && visited >= *limit) stop = true;
      return;
    }
    for (tile_id t : potential_tiles(partial)) {
      partial.push(t);
      descend();
      partial.pop();
      if (stop) return;
    }
  };
  descend();
  return visited;
}

// The number of suitably connected n-mosaics, by depth-first row-major
// backtracking. The optional cancel callback is polled once per completed
// mosaic; when it returns true the partial count so far is returned.
inline std::uint64_t count_mosaics(int n, const std::function<bool()>& cancelled = {}) {
  if (!cancelled) return iterate_mosaics(n, {});
  return iterate_mosaics(n, [&](const mosaic&) { return !cancelled(); });
}

}  // namespace kmosaic
