#ifndef UQDRAW_ARRANGEMENT_HPP
#define UQDRAW_ARRANGEMENT_HPP

#include <string>
#include <vector>

#include "uqdraw/learning_graph.hpp"
#include "uqdraw/set_family.hpp"

namespace uqdraw {

/// Bijection on 0..n-1.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless the values are a bijection on 0..n-1.
  explicit Permutation(std::vector<int> mapping);

  static Permutation identity(int n);
  static Permutation reversed(int n);

  int size() const { return static_cast<int>(map_.size()); }
  int operator[](int i) const { return map_.at(static_cast<size_t>(i)); }
  const std::vector<int>& mapping() const { return map_; }
  Permutation inverse() const;
  /// Number of pairs i<j with pi(i)>pi(j).
  long long inversions() const;

  bool operator==(const Permutation& o) const = default;

 private:
  std::vector<int> map_;
};

/// Apex of one translated negative quadrant { (x,y) : x <= x_e, y <= y_e }.
struct Corner {
  int x = 0;
  int y = 0;
};

/// Arrangement of translated negative quadrants, one per universe element.
/// All x coordinates are pairwise distinct, as are all y coordinates.
/// Canonical form has x coordinates 0..n-1 in universe order and y
/// coordinates forming a permutation of 0..n-1.
class QuadrantArrangement {
 public:
  QuadrantArrangement() = default;
  /// Throws std::invalid_argument on duplicate x or duplicate y coordinates.
  QuadrantArrangement(Universe universe, std::vector<Corner> corners);

  const Universe& universe() const { return universe_; }
  const std::vector<Corner>& corners() const { return corners_; }
  const Corner& corner(int e) const { return corners_.at(static_cast<size_t>(e)); }
  int size() const { return static_cast<int>(corners_.size()); }

  /// Same arrangement with coordinates replaced by their ranks.
  QuadrantArrangement canonical() const;
  bool is_canonical() const;

 private:
  Universe universe_;
  std::vector<Corner> corners_;
};

/// Canonical arrangement binding names to x-ranks in input order: the
/// element with x-rank i sits at corner (i, pi(i)).
QuadrantArrangement from_permutation(const std::vector<std::string>& names,
                                     const Permutation& pi);

/// The defining permutation of a canonical arrangement (y-rank by x-rank).
Permutation arrangement_permutation(const QuadrantArrangement& a);

/// The family of region labels: for each plane region, the set of quadrants
/// not containing it. Computed by sampling one point per cell of the grid
/// refinement; `resolution` multiplies the number of samples per axis and
/// never changes the result (regions are unions of cells).
SetFamily region_family(const QuadrantArrangement& a, int resolution = 1);

/// build_graph(region_family(a)); always a valid learning space.
LearningGraph region_graph(const QuadrantArrangement& a);

/// Closed form 1 + n + inversions(pi); equals the region count.
long long count_regions(const QuadrantArrangement& a);

}  // namespace uqdraw

#endif
