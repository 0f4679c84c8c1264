#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include "kmosaic/errors.hpp"
#include "kmosaic/mosaic.hpp"
#include "kmosaic/tiles.hpp"
#include "kmosaic/traversal.hpp"

namespace kmosaic {

// Planar diagram code: one 4-tuple of arc labels per crossing, in row-major
// crossing order, each tuple listed counterclockwise from the arc entering on
// the under-strand. Components without crossings cannot carry arc labels and
// are reported in skipped_components by their index in canonical component
// order.
struct pd_code {
  std::vector<std::array<int, 4>> tuples;
  std::vector<int> skipped_components;
  friend bool operator==(const pd_code&, const pd_code&) = default;
};

namespace detail {

// Counterclockwise successor in the cyclic side order (right, top, left,
// bottom). Rows grow downward on screen, so this is counterclockwise in the
// usual mathematical orientation.
constexpr side ccw_next(side s) noexcept {
  switch (s) {
    case side::right: return side::top;
    case side::top: return side::left;
    case side::left: return side::bottom;
    case side::bottom: return side::right;
  }
  return side::right;
}

struct crossing_record {
  std::array<int, 4> label_at_side{0, 0, 0, 0};
  std::array<bool, 4> entered_through{false, false, false, false};
};

}  // namespace detail

// Extract a planar diagram code by walking each component once in canonical
// order. Arc labels are global, increment each time a crossing is exited,
// and the arc in progress when a component closes is merged with the
// component's first labeled arc. In strict mode, components that would be
// skipped raise an error instead.
inline pd_code planar_diagram_code(const mosaic& m, bool strict = false) {
  const auto components = strands(m);  // throws when not suitably connected

  std::map<position, detail::crossing_record> records;
  int counter = 0;
  pd_code out;

  for (std::size_t comp = 0; comp < components.size(); ++comp) {
    const component_trace& trace = components[comp];

    struct visit {
      position pos;
      side entry;
      side exit;
    };
    std::vector<visit> visits;
    for (const step& s : trace) {
      if (!m.spec_at(s.pos).crossing) continue;
      const side entry = entry_side(s.motion);
      visits.push_back({s.pos, entry, traverse_tile(m.at(s.pos), entry)});
    }

    if (visits.empty()) {
      out.skipped_components.push_back(static_cast<int>(comp));
      continue;
    }

    int current_arc = 0;  // unlabeled until the first crossing is exited
    for (const visit& v : visits) {
      detail::crossing_record& rec = records[v.pos];
      rec.label_at_side[index_of(v.entry)] = current_arc;  // fixed up below for the first visit
      rec.entered_through[index_of(v.entry)] = true;
      current_arc = ++counter;
      rec.label_at_side[index_of(v.exit)] = current_arc;
    }
    // Closing the loop: the unlabeled arc the walk started on is the arc the
    // final exit created.
    records[visits.front().pos].label_at_side[index_of(visits.front().entry)] = current_arc;
  }

  for (const position& p : find_crossings(m)) {
    const detail::crossing_record& rec = records.at(p);
    const axis over = m.spec_at(p).over;
    // The under-strand runs along the other axis; start at its entry side.
    side s = over == axis::vertical ? side::left : side::top;
    if (!rec.entered_through[index_of(s)]) s = opposite(s);
    std::array<int, 4> tuple{};
    for (int k = 0; k < 4; ++k) {
      tuple[k] = rec.label_at_side[index_of(s)];
      s = detail::ccw_next(s);
    }
    out.tuples.push_back(tuple);
  }

  if (strict && !out.skipped_components.empty())
    throw error("crossing-free split components cannot be represented in a planar diagram code");
  return out;
}

// True when every tuple has four entries drawn from 1..2c and every label in
// that range occurs exactly twice, where c is the number of tuples.
inline bool validate_pd_code(const pd_code& code) {
  const int c = static_cast<int>(code.tuples.size());
  std::vector<int> counts(static_cast<std::size_t>(2 * c) + 1, 0);
  for (const auto& tuple : code.tuples) {
    for (int label : tuple) {
      if (label < 1 || label > 2 * c) return false;
      ++counts[static_cast<std::size_t>(label)];
    }
  }
  for (int label = 1; label <= 2 * c; ++label)
    if (counts[static_cast<std::size_t>(label)] != 2) return false;
  return true;
}

}  // namespace kmosaic
