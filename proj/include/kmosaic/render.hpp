#pragma once

#include <array>
#include <charconv>
#include <stdexcept>
#include <string>
#include <system_error>

#include "kmosaic/mosaic.hpp"
#include "kmosaic/tiles.hpp"

namespace kmosaic {

struct render_options {
  double tile_size = 100;  // svg cell edge length
  double gap = 12;         // half-width of the under-strand break
  bool unicode = true;     // ascii mode uses 7-bit glyphs only
};

namespace detail {

inline const char* glyph_for(tile_id t, bool unicode) {
  // Double arcs have no single box-drawing character; both modes fall back
  // to marker glyphs. Crossings show the over-strand as the heavy stroke.
  static constexpr std::array<const char*, tile_count> box{
      " ", "┐", "┌", "└", "┘", "─",
      "│", "%", "&", "┿", "╂"};
  static constexpr std::array<const char*, tile_count> plain{" ", "7", "r", "L", "J", "-",
                                                             "|", "%", "&", "x", "+"};
  return unicode ? box[t] : plain[t];
}

inline std::string number(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (res.ec != std::errc{}) return "0";
  return std::string(buf.data(), res.ptr);
}

struct point {
  double x;
  double y;
};

inline point side_midpoint(double x0, double y0, double ts, side s) {
  switch (s) {
    case side::top: return {x0 + ts / 2, y0};
    case side::right: return {x0 + ts, y0 + ts / 2};
    case side::bottom: return {x0 + ts / 2, y0 + ts};
    case side::left: return {x0, y0 + ts / 2};
  }
  return {x0, y0};
}

// Shared corner of two adjacent sides (the arc center).
inline point shared_corner(double x0, double y0, double ts, side a, side b) {
  const bool top = a == side::top || b == side::top;
  const bool left = a == side::left || b == side::left;
  return {left ? x0 : x0 + ts, top ? y0 : y0 + ts};
}

inline void append_line(std::string& out, point a, point b) {
  out += "<line x1=\"" + number(a.x) + "\" y1=\"" + number(a.y) + "\" x2=\"" + number(b.x) +
         "\" y2=\"" + number(b.y) + "\"/>\n";
}

inline void append_arc(std::string& out, point center, point from, point to, double radius) {
  // Quarter circle about `center`; the sweep flag keeps the minor arc.
  const double cross = (from.x - center.x) * (to.y - center.y) -
                       (from.y - center.y) * (to.x - center.x);
  const char sweep = cross > 0 ? '1' : '0';
  out += "<path d=\"M " + number(from.x) + ' ' + number(from.y) + " A " + number(radius) + ' ' +
         number(radius) + " 0 0 " + sweep + ' ' + number(to.x) + ' ' + number(to.y) + "\"/>\n";
}

}  // namespace detail

// One glyph cell per tile, rows separated by newlines.
inline std::string render_ascii(const mosaic& m, const render_options& opts = {}) {
  std::string out;
  const int n = m.dimension();
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) out += detail::glyph_for(m.at(r, c), opts.unicode);
    if (r + 1 < n) out += '\n';
  }
  return out;
}

// Deterministic SVG: arcs as corner-centered quarter circles, lines through
// edge midpoints, crossings with the under-strand broken around the cell
// center. Renders any tile matrix, connected or not.
inline std::string render_svg(const mosaic& m, const render_options& opts = {}) {
  if (!(opts.tile_size > 2 * opts.gap))
    throw std::invalid_argument("tile_size must exceed twice the gap");
  const int n = m.dimension();
  const double ts = opts.tile_size;
  const std::string extent = detail::number(n * ts);

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " +
                    extent + ' ' + extent + "\">\n";
  out += "<g fill=\"none\" stroke=\"black\" stroke-width=\"" + detail::number(ts / 25) +
         "\" stroke-linecap=\"round\">\n";

  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const mosaic_tile& t = m.spec_at({r, c});
      if (t.connection_count() == 0) continue;
      const double x0 = c * ts;
      const double y0 = r * ts;
      const detail::point center{x0 + ts / 2, y0 + ts / 2};

      if (t.crossing) {
        const side over_a = t.over == axis::vertical ? side::top : side::left;
        const side under_a = t.over == axis::vertical ? side::left : side::top;
        const detail::point o1 = detail::side_midpoint(x0, y0, ts, over_a);
        const detail::point o2 = detail::side_midpoint(x0, y0, ts, opposite(over_a));
        detail::append_line(out, o1, o2);
        const detail::point u1 = detail::side_midpoint(x0, y0, ts, under_a);
        const detail::point u2 = detail::side_midpoint(x0, y0, ts, opposite(under_a));
        const double g = opts.gap;
        if (t.over == axis::vertical) {
          detail::append_line(out, u1, {center.x - g, center.y});
          detail::append_line(out, {center.x + g, center.y}, u2);
        } else {
          detail::append_line(out, u1, {center.x, center.y - g});
          detail::append_line(out, {center.x, center.y + g}, u2);
        }
        continue;
      }

      for (int k = 0; k < t.strand_count; ++k) {
        const side_pair pair = t.strands[k];
        const detail::point a = detail::side_midpoint(x0, y0, ts, pair.lo);
        const detail::point b = detail::side_midpoint(x0, y0, ts, pair.hi);
        if (pair.lo == opposite(pair.hi)) {
          detail::append_line(out, a, b);  // straight strand
        } else {
          detail::append_arc(out, detail::shared_corner(x0, y0, ts, pair.lo, pair.hi), a, b,
                             ts / 2);
        }
      }
    }
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace kmosaic
