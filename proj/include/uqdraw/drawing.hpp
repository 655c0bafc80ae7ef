#ifndef UQDRAW_DRAWING_HPP
#define UQDRAW_DRAWING_HPP

#include <vector>

#include "uqdraw/learning_graph.hpp"
#include "uqdraw/recognize.hpp"
#include "uqdraw/set_family.hpp"

namespace uqdraw {

struct GridPoint {
  int x = 0;
  int y = 0;

  bool operator==(const GridPoint& o) const = default;
};

/// Integer grid coordinates per graph vertex (same indexing as the
/// learning graph's canonical vertex order).
class GridDrawing {
 public:
  GridDrawing() = default;
  explicit GridDrawing(std::vector<GridPoint> coords) : coords_(std::move(coords)) {}

  int size() const { return static_cast<int>(coords_.size()); }
  const GridPoint& at(int v) const { return coords_.at(static_cast<size_t>(v)); }
  GridPoint& at(int v) { return coords_.at(static_cast<size_t>(v)); }
  const std::vector<GridPoint>& coords() const { return coords_; }

  int max_x() const;
  int max_y() const;

  bool operator==(const GridDrawing& o) const = default;

 private:
  std::vector<GridPoint> coords_;
};

/// Places each state v at (first x_order index missing from v, first
/// y_order index missing from v); the full state lands at (n, n). The
/// orders must come from a successful recognition of f; prefix membership
/// is re-checked defensively and std::invalid_argument thrown on mismatch.
GridDrawing assign_coordinates(const SetFamily& f, const BoundaryOrders& orders);

/// Greedy validated compaction: repeatedly merges adjacent coordinate
/// values (x axis first, then y, left to right), keeping a merge only when
/// the result still passes validate_upright_quad and check_dominance, until
/// no merge is accepted. Coordinate values stay contiguous; spans never
/// grow. Minimal area is not promised.
GridDrawing compact(const GridDrawing& d, const LearningGraph& g);

}  // namespace uqdraw

#endif
