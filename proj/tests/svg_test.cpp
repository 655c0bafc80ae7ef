#include <doctest.h>

#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "uqdraw/drawing.hpp"
#include "uqdraw/recognize.hpp"
#include "uqdraw/svg.hpp"

using namespace uqdraw;

namespace {

int count_occurrences(const std::string& text, const std::string& needle) {
  int count = 0;
  for (size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("square drawing renders four circles and four lines") {
  const auto g = build_graph(power_set_family(oracle::letters(2)));
  const GridDrawing square({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const std::string svg = render_svg(square, g);
  CHECK(count_occurrences(svg, "<circle") == 4);
  CHECK(count_occurrences(svg, "<line") == 4);
  CHECK(svg.find("viewBox=\"0 0 120 120\"") != std::string::npos);  // 48 + 2*36
  CHECK(svg.find("scale(1,-1)") != std::string::npos);

  // Labels add one text element per edge and per vertex.
  SvgOptions with_labels;
  with_labels.labels = true;
  const std::string labeled = render_svg(square, g, with_labels);
  CHECK(count_occurrences(labeled, "<text") == 8);
  CHECK(labeled.find(">{a,b}</text>") != std::string::npos);
}

TEST_CASE("empty-universe drawing renders a single circle") {
  const SetFamily lone(Universe(std::vector<std::string>{}), {StateSet::empty_set()});
  const auto g = build_graph(lone);
  const std::string svg = render_svg(GridDrawing({{0, 0}}), g);
  CHECK(count_occurrences(svg, "<circle") == 1);
  CHECK(count_occurrences(svg, "<line") == 0);
}

TEST_CASE("strict rendering rejects invalid drawings; warn-only proceeds") {
  const auto g = build_graph(power_set_family(oracle::letters(2)));
  const GridDrawing bad({{0, 0}, {1, 1}, {0, 1}, {2, 2}});
  CHECK_THROWS_AS(render_svg(bad, g), std::invalid_argument);

  SvgOptions lax;
  lax.strict = false;
  ValidationReport report;
  const std::string svg = render_svg(bad, g, lax, &report);
  CHECK_FALSE(report.ok());
  CHECK(count_occurrences(svg, "<circle") == 4);
}

TEST_CASE("rendering is deterministic") {
  const auto ps4 = prefix_suffix_family(oracle::letters(4));
  const auto orders = recognize(ps4);
  REQUIRE(orders.has_value());
  const auto g = build_graph(ps4);
  const GridDrawing d = assign_coordinates(ps4, *orders);
  SvgOptions opts;
  opts.labels = true;
  CHECK(render_svg(d, g, opts) == render_svg(d, g, opts));
}

TEST_CASE("prefix-suffix n=3 labeled rendering matches the golden file") {
  const auto ps3 = prefix_suffix_family(oracle::letters(3));
  const auto orders = recognize(ps3);
  REQUIRE(orders.has_value());
  const auto g = build_graph(ps3);
  const GridDrawing d = assign_coordinates(ps3, *orders);
  SvgOptions opts;
  opts.labels = true;
  const std::string got = render_svg(d, g, opts);
  const std::string want =
      read_file(std::string(UQDRAW_SOURCE_DIR) + "/tests/golden/prefix_suffix_n3.svg");
  CHECK(got == want);
}
