#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "uqdraw/arrangement.hpp"
#include "uqdraw/family_checks.hpp"

using namespace uqdraw;

namespace {

SetFamily family_of(const std::vector<int>& pi, int n) {
  return region_family(from_permutation(oracle::letters(n).names(), Permutation(pi)));
}

}  // namespace

TEST_CASE("permutation construction and corners") {
  const auto single = from_permutation({"a"}, Permutation({0}));
  CHECK(single.corner(0).x == 0);
  CHECK(single.corner(0).y == 0);

  const auto crossing = from_permutation({"a", "b"}, Permutation({1, 0}));
  CHECK(crossing.corner(0).x == 0);
  CHECK(crossing.corner(0).y == 1);
  CHECK(crossing.corner(1).x == 1);
  CHECK(crossing.corner(1).y == 0);

  const auto rev3 = from_permutation({"a", "b", "c"}, Permutation({2, 1, 0}));
  for (int e = 0; e < 3; ++e) {
    CHECK(rev3.corner(e).x == e);
    CHECK(rev3.corner(e).y == 2 - e);
  }

  CHECK_THROWS_AS(Permutation({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(from_permutation({"a"}, Permutation({0, 1})), std::invalid_argument);
}

TEST_CASE("duplicate corner coordinates are rejected") {
  CHECK_THROWS_AS(QuadrantArrangement(oracle::letters(2), {{0, 0}, {0, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(QuadrantArrangement(oracle::letters(2), {{0, 1}, {1, 1}}),
                  std::invalid_argument);
}

TEST_CASE("region families of nested, crossing, and mixed arrangements") {
  // Identity: nested wedges force a chain.
  const SetFamily chain = family_of({0, 1, 2}, 3);
  CHECK(chain.size() == 4);
  CHECK(chain.states() ==
        std::vector<StateSet>{StateSet(0), StateSet(1), StateSet(3), StateSet(7)});

  // Reverse on two elements: the full power set, meeting the state bound.
  const SetFamily square = family_of({1, 0}, 2);
  CHECK(square.size() == 4);
  CHECK(square.size() == 1 + (2 + 1) * 2 / 2);

  // Reverse on three: the prefix-suffix family, 7 states.
  const SetFamily ps3 = family_of({2, 1, 0}, 3);
  CHECK(ps3.size() == 7);
  CHECK(ps3 == prefix_suffix_family(oracle::letters(3)));
}

TEST_CASE("region families match the independent floating-point sampler") {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& pi : oracle::all_permutations(n)) {
      const SetFamily f = family_of(pi, n);
      std::vector<std::pair<int, int>> corners;
      for (int i = 0; i < n; ++i) corners.push_back({i, pi[static_cast<size_t>(i)]});
      const auto expected = oracle::sample_region_sets(corners);
      REQUIRE(f.size() == static_cast<int>(expected.size()));
      for (StateSet s : f.states()) CHECK(expected.count(s.bits()) == 1);
    }
  }
}

TEST_CASE("doubling the sampling resolution never changes the family") {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& pi : oracle::all_permutations(n)) {
      const auto arr = from_permutation(oracle::letters(n).names(), Permutation(pi));
      CHECK(region_family(arr) == region_family(arr, 2));
    }
  }
}

TEST_CASE("non-canonical corners canonicalize to the same family") {
  // Same order type as permutation [2,0,1] but with scattered coordinates.
  const QuadrantArrangement scattered(oracle::letters(3),
                                      {{-7, 40}, {2, -3}, {19, 5}});
  const auto canon = scattered.canonical();
  CHECK(canon.is_canonical());
  CHECK(region_family(scattered) == family_of({2, 0, 1}, 3));
  CHECK(arrangement_permutation(scattered) == Permutation({2, 0, 1}));
}

TEST_CASE("region graphs of the small examples") {
  const auto path = region_graph(from_permutation({"a", "b", "c"}, Permutation({0, 1, 2})));
  CHECK(path.vertex_count() == 4);
  CHECK(path.edge_count() == 3);

  const auto cycle = region_graph(from_permutation({"a", "b"}, Permutation({1, 0})));
  CHECK(cycle.vertex_count() == 4);
  CHECK(cycle.edge_count() == 4);
}

TEST_CASE("every region family with up to 5 elements is a learning space") {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& pi : oracle::all_permutations(n)) {
      const SetFamily f = family_of(pi, n);
      CHECK(validate_family(f).ok());
      CHECK(check_union_closed(f).ok());
      CHECK(check_well_graded(f).ok());
      CHECK(verify_accessibility_extension(f).ok());
    }
  }
}

TEST_CASE("region counts follow 1 + n + inversions") {
  CHECK(count_regions(from_permutation({"a", "b", "c"}, Permutation({0, 1, 2}))) == 4);
  CHECK(count_regions(from_permutation({"a", "b", "c"}, Permutation({2, 1, 0}))) == 7);

  const auto mixed = from_permutation({"a", "b", "c"}, Permutation({1, 0, 2}));
  CHECK(count_regions(mixed) == 5);
  CHECK(count_regions(mixed) == region_family(mixed).size());

  for (int n = 0; n <= 5; ++n) {
    for (const auto& pi : oracle::all_permutations(n)) {
      const auto arr = from_permutation(oracle::letters(n).names(), Permutation(pi));
      CHECK(count_regions(arr) == region_family(arr).size());
    }
  }

  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng() % 8) + 1;
    std::vector<int> pi(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pi[static_cast<size_t>(i)] = i;
    std::shuffle(pi.begin(), pi.end(), rng);
    const auto arr = from_permutation(oracle::letters(n).names(), Permutation(pi));
    CHECK(count_regions(arr) == region_family(arr).size());
    CHECK(region_family(arr) == region_family(arr, 2));
  }
}

TEST_CASE("diagonal reflection: inverse permutation over y-ordered names") {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& pi_map : oracle::all_permutations(n)) {
      const Permutation pi(pi_map);
      const Permutation inv = pi.inverse();
      const auto names = oracle::letters(n).names();
      std::vector<std::string> names_y(static_cast<size_t>(n));
      for (int j = 0; j < n; ++j) {
        names_y[static_cast<size_t>(j)] = names[static_cast<size_t>(inv[j])];
      }
      const SetFamily lhs = region_family(from_permutation(names, pi));
      const SetFamily rhs = region_family(from_permutation(names_y, inv));
      REQUIRE(lhs.size() == rhs.size());
      // Same labeled sets, though over universes in different element order.
      for (StateSet s : lhs.states()) {
        StateSet mapped;
        for (int e : s.elements()) {
          mapped = mapped.with(rhs.universe().index(lhs.universe().name(e)));
        }
        CHECK(rhs.contains(mapped));
      }
    }
  }
}
