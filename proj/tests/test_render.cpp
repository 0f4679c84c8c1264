#include "doctest.h"

#include <cstddef>
#include <string>

#include "kmosaic/render.hpp"
#include "kmosaic/tangles.hpp"
#include "sample_mosaics.hpp"

using namespace kmosaic;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++count;
  return count;
}

}  // namespace

TEST_CASE("ascii rendering") {
  CHECK(render_ascii(samples::blank(1)) == " ");
  CHECK(render_ascii(samples::circle()) == "┌┐\n└┘");

  const std::string art = render_ascii(samples::five_two_knot());
  CHECK(count_of(art, "\n") == 4);
  // 5 crossing glyphs: heavy-horizontal for tile 9, heavy-vertical for 10.
  CHECK(count_of(art, "┿") + count_of(art, "╂") == 5);

  render_options plain;
  plain.unicode = false;
  CHECK(render_ascii(samples::circle(), plain) == "r7\nLJ");
  const std::string plain_art = render_ascii(samples::five_two_knot(), plain);
  CHECK(plain_art == " r7  \nrx+7 \nL+x+7\n L%&J\n  LJ ");
}

TEST_CASE("svg rendering") {
  const std::string blank_svg = render_svg(samples::blank(1));
  CHECK(count_of(blank_svg, "<path") == 0);
  CHECK(count_of(blank_svg, "<line") == 0);
  CHECK(blank_svg.find("viewBox=\"0 0 100 100\"") != std::string::npos);

  // Four quarter arcs form the circle.
  CHECK(count_of(render_svg(samples::circle()), "<path") == 4);

  // Each crossing cell holds one over segment and two under segments.
  const std::string knot_svg = render_svg(samples::five_two_knot());
  CHECK(count_of(knot_svg, "<line") == 15);
  CHECK(count_of(knot_svg, "<path") == 10 + 4);  // 10 arc tiles + 2 double arcs

  // Deterministic byte for byte.
  CHECK(render_svg(samples::five_two_knot()) == knot_svg);

  // Tangles and arbitrary tile matrices render without error.
  CHECK_FALSE(render_svg(rational_tangle(-3)).empty());
  CHECK_FALSE(render_svg(mosaic({{5}})).empty());
  CHECK_FALSE(render_ascii(tangle_join(2, 2)).empty());

  // Minimal well-formedness: tag brackets balance and the document closes.
  CHECK(count_of(knot_svg, "<") == count_of(knot_svg, ">"));
  CHECK(knot_svg.rfind("</svg>\n") == knot_svg.size() - 7);

  render_options custom;
  custom.tile_size = 40;
  custom.gap = 21;
  CHECK_THROWS_AS(render_svg(samples::circle(), custom), std::invalid_argument);
}
