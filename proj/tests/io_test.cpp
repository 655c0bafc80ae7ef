#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "uqdraw/drawing.hpp"
#include "uqdraw/io.hpp"
#include "uqdraw/recognize.hpp"

using namespace uqdraw;

namespace {

SetFamily parse_family(const std::string& text) {
  std::istringstream in(text);
  return read_family(in);
}

QuadrantArrangement parse_arrangement(const std::string& text) {
  std::istringstream in(text);
  return read_arrangement(in);
}

DrawingFile parse_drawing(const std::string& text) {
  std::istringstream in(text);
  return read_drawing(in);
}

template <typename Fn>
ParseError capture(Fn&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a ParseError");
  return ParseError(0, 0, "unreachable");
}

}  // namespace

TEST_CASE("family files round-trip through text") {
  const std::string text =
      "family v1\n"
      "universe a b c\n"
      "state\n"
      "state a\n"
      "state a b\n";
  const SetFamily f = parse_family(text);
  CHECK(f.size() == 3);
  CHECK(f.universe().size() == 3);
  CHECK(write_family(f) == text);

  // Comments, blank lines, and reordering normalize away.
  const SetFamily g = parse_family(
      "family v1\n\n# comment\nuniverse a b c\nstate a b\nstate  # empty\nstate a\n");
  CHECK(write_family(g) == text);
}

TEST_CASE("family parse errors carry line and column") {
  const ParseError missing = capture([] { parse_family("family v2\n"); });
  CHECK(missing.line() == 1);

  const ParseError unknown =
      capture([] { parse_family("family v1\nuniverse a b\nstate a q\n"); });
  CHECK(unknown.line() == 3);
  CHECK(unknown.col() == 9);
  CHECK(std::string(unknown.what()).find("unknown element 'q'") != std::string::npos);

  const ParseError dup = capture(
      [] { parse_family("family v1\nuniverse a b\nstate a\nstate b\nstate a\n"); });
  CHECK(dup.line() == 5);
  CHECK(std::string(dup.what()).find("duplicate state") != std::string::npos);

  const ParseError dup_elem =
      capture([] { parse_family("family v1\nuniverse a b a\n"); });
  CHECK(dup_elem.line() == 2);
  CHECK(dup_elem.col() == 14);

  const ParseError directive =
      capture([] { parse_family("family v1\nuniverse a\nvertices 3\n"); });
  CHECK(directive.line() == 3);

  const ParseError no_universe = capture([] { parse_family("family v1\nstate a\n"); });
  CHECK(no_universe.line() == 2);
}

TEST_CASE("arrangement files: corner and permutation forms") {
  const auto by_corners = parse_arrangement(
      "arrangement v1\nuniverse a b c\ncorner a 10 5\ncorner b -3 40\ncorner c 4 -2\n");
  const auto canon = by_corners.canonical();
  CHECK(canon.is_canonical());

  const auto by_permutation =
      parse_arrangement("arrangement v1\nuniverse a b c\npermutation 1 2 0\n");
  CHECK(by_permutation.is_canonical());
  CHECK(arrangement_permutation(by_permutation) == Permutation({1, 2, 0}));

  // Canonical arrangements serialize in compact form; scattered corners
  // keep their coordinates.
  CHECK(write_arrangement(by_permutation) ==
        "arrangement v1\nuniverse a b c\npermutation 1 2 0\n");
  CHECK(write_arrangement(by_corners) ==
        "arrangement v1\nuniverse a b c\ncorner a 10 5\ncorner b -3 40\ncorner c 4 -2\n");

  const ParseError dup_x = capture([] {
    parse_arrangement("arrangement v1\nuniverse a b\ncorner a 0 0\ncorner b 0 1\n");
  });
  CHECK(dup_x.line() == 4);
  CHECK(std::string(dup_x.what()).find("already used") != std::string::npos);

  const ParseError bad_pi = capture(
      [] { parse_arrangement("arrangement v1\nuniverse a b\npermutation 0 2\n"); });
  CHECK(bad_pi.line() == 3);

  const ParseError mixed = capture([] {
    parse_arrangement("arrangement v1\nuniverse a b\ncorner a 0 0\npermutation 0 1\n");
  });
  CHECK(mixed.line() == 4);

  const ParseError incomplete = capture(
      [] { parse_arrangement("arrangement v1\nuniverse a b\ncorner a 0 0\n"); });
  CHECK(std::string(incomplete.what()).find("every element") != std::string::npos);
}

TEST_CASE("drawing files round-trip and reject inconsistent edge lists") {
  const auto ps3 = prefix_suffix_family(oracle::letters(3));
  const auto orders = recognize(ps3);
  REQUIRE(orders.has_value());
  const auto graph = build_graph(ps3);
  const GridDrawing drawing = assign_coordinates(ps3, *orders);

  const std::string text = write_drawing(drawing, graph);
  const DrawingFile parsed = parse_drawing(text);
  CHECK(parsed.graph == graph);
  CHECK(parsed.drawing == drawing);
  CHECK(write_drawing(parsed.drawing, parsed.graph) == text);

  // Vertex order in the file does not matter; states map back canonically.
  const DrawingFile shuffled = parse_drawing(
      "drawing v1\nuniverse a\nvertex 1 1 a\nvertex 0 0\nedge 1 0 a\n");
  CHECK(shuffled.drawing.at(shuffled.graph.source()) == GridPoint{0, 0});
  CHECK(shuffled.drawing.at(shuffled.graph.sink()) == GridPoint{1, 1});

  const ParseError missing_edge = capture(
      [] { parse_drawing("drawing v1\nuniverse a\nvertex 0 0\nvertex 1 1 a\n"); });
  CHECK(std::string(missing_edge.what()).find("missing edge") != std::string::npos);

  const ParseError wrong_label = capture([] {
    parse_drawing(
        "drawing v1\nuniverse a b\nvertex 0 0\nvertex 1 0 a\nvertex 2 2 a b\n"
        "edge 0 1 b\nedge 1 2 b\n");
  });
  CHECK(wrong_label.line() == 6);

  const ParseError negative = capture(
      [] { parse_drawing("drawing v1\nuniverse a\nvertex 0 0\nvertex -1 1 a\n"); });
  CHECK(negative.line() == 4);

  // Drawings of families that violate the axioms are semantic errors, not
  // parse errors.
  CHECK_THROWS_AS(
      parse_drawing("drawing v1\nuniverse a b\nvertex 0 0\nvertex 1 0 a\nvertex 0 1 b\n"
                    "edge 0 1 a\nedge 0 2 b\n"),
      std::invalid_argument);
}

TEST_CASE("graph serialization lists vertices and labeled edges") {
  const auto g = build_graph(power_set_family(oracle::letters(2)));
  CHECK(write_graph(g) ==
        "graph v1\n"
        "universe a b\n"
        "vertex\n"
        "vertex a\n"
        "vertex b\n"
        "vertex a b\n"
        "edge 0 1 a\n"
        "edge 0 2 b\n"
        "edge 1 3 b\n"
        "edge 2 3 a\n");
}
