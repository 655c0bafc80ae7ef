#ifndef UQDRAW_LEARNING_GRAPH_HPP
#define UQDRAW_LEARNING_GRAPH_HPP

#include <vector>

#include "uqdraw/set_family.hpp"

namespace uqdraw {

/// Directed edge from one state to the state with one extra element.
struct LabeledEdge {
  int from = -1;
  int to = -1;
  int label = -1;  // index of the added element
};

/// The DAG of a learning space: one vertex per state, an edge S -> S+x
/// whenever both are states. Vertices are kept in canonical family order,
/// which is also a topological order (cardinality increases along edges).
class LearningGraph {
 public:
  LearningGraph() = default;
  LearningGraph(SetFamily family, std::vector<LabeledEdge> edges, int source, int sink);

  const Universe& universe() const { return family_.universe(); }
  const SetFamily& family() const { return family_; }
  int vertex_count() const { return family_.size(); }
  const StateSet& vertex(int i) const { return family_.state(i); }
  int index_of(StateSet s) const { return family_.index_of(s); }

  const std::vector<LabeledEdge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  /// Edge ids leaving / entering a vertex, in edge order.
  const std::vector<int>& out_edges(int v) const { return out_.at(static_cast<size_t>(v)); }
  const std::vector<int>& in_edges(int v) const { return in_.at(static_cast<size_t>(v)); }

  int source() const { return source_; }
  int sink() const { return sink_; }

  bool operator==(const LearningGraph& o) const {
    return family_ == o.family_ && edges_.size() == o.edges_.size() &&
           std::equal(edges_.begin(), edges_.end(), o.edges_.begin(),
                      [](const LabeledEdge& a, const LabeledEdge& b) {
                        return a.from == b.from && a.to == b.to && a.label == b.label;
                      });
  }

 private:
  SetFamily family_;
  std::vector<LabeledEdge> edges_;
  std::vector<std::vector<int>> out_, in_;
  int source_ = -1;
  int sink_ = -1;
};

/// Builds the learning graph of a family. The family must pass
/// validate_family; throws std::invalid_argument otherwise.
LearningGraph build_graph(const SetFamily& f);

}  // namespace uqdraw

#endif
