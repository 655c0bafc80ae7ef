#include "uqdraw/learning_graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "uqdraw/family_checks.hpp"

namespace uqdraw {

LearningGraph::LearningGraph(SetFamily family, std::vector<LabeledEdge> edges,
                             int source, int sink)
    : family_(std::move(family)),
      edges_(std::move(edges)),
      out_(static_cast<size_t>(family_.size())),
      in_(static_cast<size_t>(family_.size())),
      source_(source),
      sink_(sink) {
  for (size_t i = 0; i < edges_.size(); ++i) {
    out_[static_cast<size_t>(edges_[i].from)].push_back(static_cast<int>(i));
    in_[static_cast<size_t>(edges_[i].to)].push_back(static_cast<int>(i));
  }
}

LearningGraph build_graph(const SetFamily& f) {
  const ValidationReport report = validate_family(f);
  if (!report.ok()) {
    throw std::invalid_argument("not a learning space:\n" + report.summary(f.universe()));
  }
  const int n = f.universe().size();
  std::vector<LabeledEdge> edges;
  for (int i = 0; i < f.size(); ++i) {
    const StateSet s = f.state(i);
    for (int x = 0; x < n; ++x) {
      if (s.contains(x)) continue;
      const int j = f.index_of(s.with(x));
      if (j >= 0) edges.push_back({i, j, x});
    }
  }
  const int source = f.index_of(StateSet::empty_set());
  const int sink = f.index_of(f.union_of_states());
  if (source < 0 || sink < 0) {
    throw std::logic_error("validated family lost its source or sink");
  }
  return LearningGraph(f, std::move(edges), source, sink);
}

}  // namespace uqdraw
