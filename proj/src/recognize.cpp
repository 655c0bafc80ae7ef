#include "uqdraw/recognize.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "uqdraw/family_checks.hpp"

namespace uqdraw {

ImplicationPoset::ImplicationPoset(const SetFamily& f) {
  const int n = f.universe().size();
  below_.assign(static_cast<size_t>(n), 0);
  for (int e = 0; e < n; ++e) {
    // Intersection of all states containing e; empty intersection over no
    // states degenerates to the full mask.
    std::uint64_t meet = f.universe().full_mask();
    for (StateSet s : f.states()) {
      if (s.contains(e)) meet &= s.bits();
    }
    below_[static_cast<size_t>(e)] = meet;
  }
  for (int e = 0; e < n; ++e) {
    for (int g = 0; g < n; ++g) {
      if (e != g && leq(e, g) && leq(g, e)) {
        throw std::logic_error("implication poset is not antisymmetric; elements '" +
                               f.universe().name(e) + "' and '" + f.universe().name(g) +
                               "' are never distinguished");
      }
    }
  }
}

ImplicationPoset implication_poset(const SetFamily& f) {
  const ValidationReport report = validate_family(f);
  if (!report.ok()) {
    throw std::invalid_argument("not a learning space:\n" + report.summary(f.universe()));
  }
  return ImplicationPoset(f);
}

QuadrantArrangement arrangement_from_orders(const Universe& u,
                                            const BoundaryOrders& orders) {
  const int n = u.size();
  std::vector<Corner> corners(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    corners[static_cast<size_t>(orders.x_order[static_cast<size_t>(i)])].x = i;
    corners[static_cast<size_t>(orders.y_order[static_cast<size_t>(i)])].y = i;
  }
  return QuadrantArrangement(u, std::move(corners));
}

namespace {

// y-order forced by an x-order: comparable pairs keep their poset order,
// incomparable pairs reverse their x-order. Empty result when the forced
// relation is not a total order.
std::optional<std::vector<int>> forced_y_order(const ImplicationPoset& poset,
                                               const std::vector<int>& x_order) {
  const int n = poset.size();
  std::vector<int> x_pos(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) x_pos[static_cast<size_t>(x_order[static_cast<size_t>(i)])] = i;
  auto before = [&](int e, int g) {
    if (poset.leq(e, g)) return true;
    if (poset.leq(g, e)) return false;
    return x_pos[static_cast<size_t>(g)] < x_pos[static_cast<size_t>(e)];
  };
  // A tournament is a total order iff its win counts are all distinct.
  std::vector<int> wins(static_cast<size_t>(n), 0);
  for (int e = 0; e < n; ++e) {
    for (int g = 0; g < n; ++g) {
      if (e != g && before(e, g)) ++wins[static_cast<size_t>(e)];
    }
  }
  std::vector<int> order(static_cast<size_t>(n), -1);
  for (int e = 0; e < n; ++e) {
    const int pos = n - 1 - wins[static_cast<size_t>(e)];
    if (order[static_cast<size_t>(pos)] != -1) return std::nullopt;
    order[static_cast<size_t>(pos)] = e;
  }
  return order;
}

bool family_matches(const SetFamily& f, const BoundaryOrders& orders) {
  return region_family(arrangement_from_orders(f.universe(), orders)) == f;
}

struct RecognizeSearch {
  const SetFamily& f;
  const ImplicationPoset& poset;
  int n;
  std::vector<int> x_order;
  StateSet placed;
  std::optional<BoundaryOrders> result;

  bool dfs() {
    if (static_cast<int>(x_order.size()) == n) {
      auto y = forced_y_order(poset, x_order);
      if (!y) return false;
      BoundaryOrders candidate{x_order, *y};
      if (family_matches(f, candidate)) {
        result = std::move(candidate);
        return true;
      }
      return false;
    }
    for (int e = 0; e < n; ++e) {
      if (placed.contains(e)) continue;
      // Linear-extension pruning: all poset predecessors already placed.
      if ((poset.below(e) & ~placed.with(e).bits()) != 0) continue;
      // Right-path pruning: every x-order prefix must be a state.
      if (!f.contains(placed.with(e))) continue;
      x_order.push_back(e);
      placed = placed.with(e);
      if (dfs()) return true;
      placed = placed.without(e);
      x_order.pop_back();
    }
    return false;
  }
};

void require_valid(const SetFamily& f) {
  const ValidationReport report = validate_family(f);
  if (!report.ok()) {
    throw std::invalid_argument("not a learning space:\n" + report.summary(f.universe()));
  }
}

}  // namespace

std::optional<BoundaryOrders> recognize(const SetFamily& f) {
  require_valid(f);
  const int n = f.universe().size();
  if (f.union_of_states().bits() != f.universe().full_mask()) {
    // Some element appears in no state; no arrangement family misses one.
    return std::nullopt;
  }
  if (n == 0) {
    return BoundaryOrders{};  // the one-state family over the empty universe
  }
  const ImplicationPoset poset(f);
  RecognizeSearch search{f, poset, n, {}, StateSet::empty_set(), std::nullopt};
  search.x_order.reserve(static_cast<size_t>(n));
  search.dfs();
  return search.result;
}

std::optional<BoundaryOrders> brute_force_recognize(const SetFamily& f) {
  const int n = f.universe().size();
  if (n > 8) {
    throw std::invalid_argument("brute-force recognition is capped at 8 elements");
  }
  require_valid(f);
  if (n == 0) {
    return BoundaryOrders{};
  }
  std::vector<int> x_order(static_cast<size_t>(n));
  std::iota(x_order.begin(), x_order.end(), 0);
  do {
    std::vector<int> pi(static_cast<size_t>(n));
    std::iota(pi.begin(), pi.end(), 0);
    do {
      // Element x_order[i] at corner (i, pi[i]).
      std::vector<int> y_order(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) {
        y_order[static_cast<size_t>(pi[static_cast<size_t>(i)])] =
            x_order[static_cast<size_t>(i)];
      }
      BoundaryOrders candidate{x_order, y_order};
      if (family_matches(f, candidate)) return candidate;
    } while (std::next_permutation(pi.begin(), pi.end()));
  } while (std::next_permutation(x_order.begin(), x_order.end()));
  return std::nullopt;
}

namespace {

std::vector<std::string> census_names(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    names.push_back(std::string(1, static_cast<char>('a' + i)));
  }
  return names;
}

std::vector<std::uint64_t> family_masks(const SetFamily& f) {
  std::vector<std::uint64_t> masks;
  masks.reserve(static_cast<size_t>(f.size()));
  for (StateSet s : f.states()) masks.push_back(s.bits());
  std::sort(masks.begin(), masks.end());
  return masks;
}

std::vector<std::uint64_t> relabeled_masks(const std::vector<std::uint64_t>& masks,
                                           const std::vector<int>& sigma) {
  std::vector<std::uint64_t> out;
  out.reserve(masks.size());
  for (std::uint64_t m : masks) {
    std::uint64_t r = 0;
    for (std::uint64_t b = m; b != 0; b &= b - 1) {
      r |= std::uint64_t{1} << sigma[static_cast<size_t>(std::countr_zero(b))];
    }
    out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Lexicographic minimum of the sorted mask vector over all relabelings.
std::vector<std::uint64_t> unlabeled_canon(const std::vector<std::uint64_t>& masks, int n) {
  std::vector<int> sigma(static_cast<size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::uint64_t> best = relabeled_masks(masks, sigma);
  while (std::next_permutation(sigma.begin(), sigma.end())) {
    std::vector<std::uint64_t> cand = relabeled_masks(masks, sigma);
    if (cand < best) best = cand;
  }
  return best;
}

}  // namespace

CensusReport census(int n) {
  if (n < 0 || n > 6) {
    throw std::invalid_argument("census is capped at 6 elements");
  }
  const Universe u(census_names(n));

  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const size_t total = perms.size();
  std::vector<SetFamily> families(total);
  std::vector<std::vector<std::uint64_t>> canons(total);

  // Map step: each permutation independently; reduction stays ordered.
  auto work = [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
      families[i] = region_family(from_permutation(u.names(), Permutation(perms[i])));
      canons[i] = unlabeled_canon(family_masks(families[i]), n);
    }
  };
  const size_t threads =
      std::min<size_t>(std::max<size_t>(std::thread::hardware_concurrency(), 1), 8);
  if (threads <= 1 || total < 16) {
    work(0, total);
  } else {
    std::vector<std::thread> pool;
    const size_t chunk = (total + threads - 1) / threads;
    for (size_t t = 0; t < threads; ++t) {
      const size_t lo = std::min(total, t * chunk);
      const size_t hi = std::min(total, lo + chunk);
      if (lo < hi) pool.emplace_back(work, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  CensusReport report;
  report.n = n;
  report.permutations = static_cast<long long>(total);
  report.state_bound = 1 + static_cast<long long>(n + 1) * n / 2;
  report.class_bound = 1;
  for (int i = 2; i <= n; ++i) report.class_bound *= i;

  std::vector<std::vector<std::uint64_t>> labeled, unlabeled;
  for (size_t i = 0; i < total; ++i) {
    labeled.push_back(family_masks(families[i]));
    unlabeled.push_back(canons[i]);
    report.max_family_size = std::max<long long>(report.max_family_size, families[i].size());
  }
  std::sort(labeled.begin(), labeled.end());
  labeled.erase(std::unique(labeled.begin(), labeled.end()), labeled.end());
  std::sort(unlabeled.begin(), unlabeled.end());
  unlabeled.erase(std::unique(unlabeled.begin(), unlabeled.end()), unlabeled.end());
  report.labeled_classes = static_cast<long long>(labeled.size());
  report.unlabeled_classes = static_cast<long long>(unlabeled.size());

  // Diagonal-flip identification: relabeling family(pi) by pi itself gives
  // family(pi^-1), exactly.
  report.inverse_identification_ok = true;
  for (size_t i = 0; i < total; ++i) {
    const Permutation pi(perms[i]);
    const Permutation inv = pi.inverse();
    const size_t j = static_cast<size_t>(
        std::lower_bound(perms.begin(), perms.end(), inv.mapping()) - perms.begin());
    const auto lhs = relabeled_masks(family_masks(families[i]), pi.mapping());
    if (lhs != family_masks(families[j])) {
      report.inverse_identification_ok = false;
    }
  }

  report.permutation_list.reserve(total);
  for (size_t i = 0; i < total; ++i) report.permutation_list.emplace_back(perms[i]);
  report.family_by_permutation = std::move(families);
  return report;
}

std::string CensusReport::table() const {
  std::ostringstream out;
  out << "census v1\n";
  out << "n                 " << n << "\n";
  out << "permutations      " << permutations << "\n";
  out << "labeled-classes   " << labeled_classes << "\n";
  out << "unlabeled-classes " << unlabeled_classes << "\n";
  out << "max-family-size   " << max_family_size << "\n";
  out << "state-bound       " << state_bound << "\n";
  out << "class-bound       " << class_bound << "\n";
  out << "pi-inverse-check  " << (inverse_identification_ok ? "ok" : "FAILED") << "\n";
  return out.str();
}

}  // namespace uqdraw
