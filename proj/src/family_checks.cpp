#include "uqdraw/family_checks.hpp"

#include <cstdint>
#include <deque>
#include <stdexcept>

namespace uqdraw {

ValidationReport validate_family(const SetFamily& f) {
  ValidationReport report;
  const int n = f.universe().size();

  if (!f.contains(StateSet::empty_set())) {
    report.add(Axiom::L1, {StateSet::empty_set()}, "empty set is not a state");
  }

  for (StateSet s : f.states()) {
    if (s.is_empty()) continue;
    bool has_step_down = false;
    for (int x : s.elements()) {
      if (f.contains(s.without(x))) {
        has_step_down = true;
        break;
      }
    }
    if (!has_step_down) {
      report.add(Axiom::L1, {s}, "no single element can be removed");
    }
  }

  for (StateSet s : f.states()) {
    std::vector<int> ext;
    for (int x = 0; x < n; ++x) {
      if (!s.contains(x) && f.contains(s.with(x))) ext.push_back(x);
    }
    for (size_t i = 0; i < ext.size(); ++i) {
      for (size_t j = i + 1; j < ext.size(); ++j) {
        const int x = ext[i], y = ext[j];
        if (!f.contains(s.with(x).with(y))) {
          report.add(Axiom::L2, {s, s.with(x), s.with(y)},
                     "missing joint extension " +
                         to_string(s.with(x).with(y), f.universe()));
        }
      }
    }
  }
  return report;
}

ValidationReport check_union_closed(const SetFamily& f) {
  ValidationReport report;
  const auto& states = f.states();
  for (size_t i = 0; i < states.size(); ++i) {
    for (size_t j = i + 1; j < states.size(); ++j) {
      if (!f.contains(states[i] | states[j])) {
        report.add(Axiom::Union, {states[i], states[j]},
                   "union " + to_string(states[i] | states[j], f.universe()) +
                       " is not a state");
      }
    }
  }
  return report;
}

namespace {

// Shortest path from `from` to `to` by single-element steps through states
// lying between lo and hi; -1 when unreachable.
int bounded_step_distance(const SetFamily& f, StateSet from, StateSet to,
                          StateSet lo, StateSet hi) {
  if (from == to) return 0;
  std::vector<int> dist(static_cast<size_t>(f.size()), -1);
  std::deque<int> queue;
  dist[static_cast<size_t>(f.index_of(from))] = 0;
  queue.push_back(f.index_of(from));
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    const StateSet s = f.state(cur);
    for (int next = 0; next < f.size(); ++next) {
      if (dist[static_cast<size_t>(next)] >= 0) continue;
      const StateSet t = f.state(next);
      if ((s ^ t).count() != 1) continue;
      if (!lo.subset_of(t) || !t.subset_of(hi)) continue;
      dist[static_cast<size_t>(next)] = dist[static_cast<size_t>(cur)] + 1;
      if (t == to) return dist[static_cast<size_t>(next)];
      queue.push_back(next);
    }
  }
  return -1;
}

}  // namespace

ValidationReport check_well_graded(const SetFamily& f) {
  ValidationReport report;
  const auto& states = f.states();
  for (size_t i = 0; i < states.size(); ++i) {
    for (size_t j = i + 1; j < states.size(); ++j) {
      const StateSet s = states[i], t = states[j];
      const int want = (s ^ t).count();
      const int got = bounded_step_distance(f, s, t, s & t, s | t);
      if (got != want) {
        report.add(Axiom::WellGraded, {s, t},
                   "no single-step path of length " + std::to_string(want));
      }
    }
  }
  return report;
}

ValidationReport verify_accessibility_extension(const SetFamily& f) {
  ValidationReport report;
  const int n = f.universe().size();
  for (StateSet k : f.states()) {
    for (StateSet l : f.states()) {
      if (!k.subset_of(l) || k == l) continue;
      for (int q = 0; q < n; ++q) {
        if (l.contains(q)) continue;
        if (!f.contains(k.with(q))) continue;
        if (!f.contains(l.with(q))) {
          report.add(Axiom::AccessExt, {k, l, k.with(q)},
                     "extension by '" + f.universe().name(q) +
                         "' does not transfer to the superset");
        }
      }
    }
  }
  return report;
}

std::vector<StateSet> chain_between(const SetFamily& f, StateSet from, StateSet to) {
  if (!f.contains(from) || !f.contains(to)) {
    throw std::invalid_argument("chain endpoints must be states of the family");
  }
  if (!from.subset_of(to)) {
    throw std::invalid_argument("chain start must be a subset of the end");
  }
  std::vector<StateSet> chain{from};
  StateSet cur = from;
  while (!(cur == to)) {
    bool advanced = false;
    for (int x : (to - cur).elements()) {
      if (f.contains(cur.with(x))) {
        cur = cur.with(x);
        chain.push_back(cur);
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      throw std::invalid_argument(
          "no admissible one-element step; family violates the learning-space axioms");
    }
  }
  return chain;
}

}  // namespace uqdraw
