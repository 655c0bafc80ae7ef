#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "uqdraw/arrangement.hpp"
#include "uqdraw/learning_graph.hpp"

using namespace uqdraw;

namespace {

// Brute-force edge count: ordered pairs differing by one added element.
int pair_scan_edge_count(const SetFamily& f) {
  int count = 0;
  for (StateSet s : f.states()) {
    for (StateSet t : f.states()) {
      if (s.subset_of(t) && (t - s).count() == 1) ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("graphs of the canonical small families") {
  const auto power2 = build_graph(power_set_family(oracle::letters(2)));
  CHECK(power2.vertex_count() == 4);
  CHECK(power2.edge_count() == 4);
  CHECK(power2.vertex(power2.source()) == StateSet(0));
  CHECK(power2.vertex(power2.sink()) == StateSet(3));

  const auto chain = build_graph(oracle::make_family(
      {"a", "b", "c"}, {{}, {"a"}, {"a", "b"}, {"a", "b", "c"}}));
  CHECK(chain.vertex_count() == 4);
  CHECK(chain.edge_count() == 3);
  for (int v = 0; v < chain.vertex_count(); ++v) {
    CHECK(chain.out_edges(v).size() == (v == chain.sink() ? 0u : 1u));
  }

  const auto ps3_family = prefix_suffix_family(oracle::letters(3));
  const auto ps3 = build_graph(ps3_family);
  CHECK(ps3.vertex_count() == 7);  // 1 + (3+1)*3/2
  CHECK(ps3.edge_count() == pair_scan_edge_count(ps3_family));
  CHECK(ps3.edge_count() == 9);
}

TEST_CASE("building a graph from an invalid family throws") {
  const auto bad = oracle::make_family({"a", "b"}, {{}, {"a"}, {"b"}});
  CHECK_THROWS_AS(build_graph(bad), std::invalid_argument);
}

TEST_CASE("edge labels connect each state to its one-element extension") {
  const auto g = build_graph(prefix_suffix_family(oracle::letters(4)));
  for (const LabeledEdge& e : g.edges()) {
    CHECK(g.vertex(e.to) == g.vertex(e.from).with(e.label));
    CHECK_FALSE(g.vertex(e.from).contains(e.label));
  }
}

TEST_CASE("degrees, path lengths, and undirected distances over all learning"
          " spaces on up to 3 elements") {
  for (int n = 0; n <= 3; ++n) {
    const Universe u = oracle::letters(n);
    for (const oracle::Masks& masks : oracle::all_learning_spaces(n)) {
      const LearningGraph g = build_graph(oracle::masks_to_family(u, masks));

      for (int v = 0; v < g.vertex_count(); ++v) {
        CHECK((g.in_edges(v).empty()) == (v == g.source()));
        CHECK((g.out_edges(v).empty()) == (v == g.sink()));
      }

      // Every directed path between comparable states has length |T-S|.
      const oracle::PathLengths paths = oracle::path_lengths(g);
      for (int a = 0; a < g.vertex_count(); ++a) {
        for (int b = 0; b < g.vertex_count(); ++b) {
          const StateSet s = g.vertex(a), t = g.vertex(b);
          if (s.subset_of(t)) {
            CHECK(paths.shortest[a][b] == (t - s).count());
            CHECK(paths.longest[a][b] == (t - s).count());
          } else {
            CHECK(paths.shortest[a][b] == -1);
          }
        }
      }

      // Partial-cube property: undirected distance equals Hamming distance.
      for (int a = 0; a < g.vertex_count(); ++a) {
        const auto dist = oracle::undirected_distances(g, a);
        for (int b = 0; b < g.vertex_count(); ++b) {
          CHECK(dist[b] == (g.vertex(a) ^ g.vertex(b)).count());
        }
      }
    }
  }
}

TEST_CASE("partial-cube distances on the full 5-element permutation sweep") {
  for (const auto& pi : oracle::all_permutations(5)) {
    const LearningGraph g = region_graph(
        from_permutation(oracle::letters(5).names(), Permutation(pi)));
    for (int a = 0; a < g.vertex_count(); ++a) {
      const auto dist = oracle::undirected_distances(g, a);
      for (int b = 0; b < g.vertex_count(); ++b) {
        CHECK(dist[b] == (g.vertex(a) ^ g.vertex(b)).count());
      }
    }
  }
}
