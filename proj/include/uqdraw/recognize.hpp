#ifndef UQDRAW_RECOGNIZE_HPP
#define UQDRAW_RECOGNIZE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uqdraw/arrangement.hpp"
#include "uqdraw/set_family.hpp"

namespace uqdraw {

/// Element order implied by state membership: e <= f iff every state
/// containing f also contains e. Reflexive, antisymmetric and transitive
/// for any family whose states distinguish all elements.
class ImplicationPoset {
 public:
  ImplicationPoset() = default;
  explicit ImplicationPoset(const SetFamily& f);

  int size() const { return static_cast<int>(below_.size()); }
  bool leq(int e, int f) const { return (below_[static_cast<size_t>(f)] >> e) & 1u; }
  bool comparable(int e, int f) const { return leq(e, f) || leq(f, e); }
  /// Mask of all g with g <= e (including e).
  std::uint64_t below(int e) const { return below_[static_cast<size_t>(e)]; }

 private:
  std::vector<std::uint64_t> below_;
};

ImplicationPoset implication_poset(const SetFamily& f);

/// Label sequences along the right and left exterior paths of an
/// upright-quad drawing, bottom to top. Each is a permutation of the
/// universe's element indices.
struct BoundaryOrders {
  std::vector<int> x_order;
  std::vector<int> y_order;

  bool operator==(const BoundaryOrders& o) const = default;
};

/// Decides whether a learning space is the region family of a quadrant
/// arrangement and recovers the boundary orders if so. Backtracks over
/// x-orders that are linear extensions of the implication poset with every
/// prefix a state; the y-order is forced, and a candidate is accepted only
/// if the induced region family equals the input exactly. Returns the
/// lexicographically smallest accepting x-order. Worst-case cost is
/// exponential in the universe size; at the intended desk scale this is
/// immaterial. Throws std::invalid_argument on families that fail
/// validate_family; a clean "not st-planar" answer is an empty optional.
std::optional<BoundaryOrders> recognize(const SetFamily& f);

/// Independent factorial-cost oracle: tries every x-order against every
/// corner permutation and compares region families. Capped at 8 elements.
std::optional<BoundaryOrders> brute_force_recognize(const SetFamily& f);

/// The arrangement induced by boundary orders over the family's universe:
/// element e sits at corner (position in x_order, position in y_order).
QuadrantArrangement arrangement_from_orders(const Universe& u, const BoundaryOrders& orders);

/// Census of region families over all permutations of n elements.
struct CensusReport {
  int n = 0;
  long long permutations = 0;
  long long labeled_classes = 0;    // distinct families with labels fixed
  long long unlabeled_classes = 0;  // distinct up to element relabeling
  long long max_family_size = 0;
  long long state_bound = 0;  // 1 + (n+1)n/2
  long long class_bound = 0;  // n!
  /// Whether relabeling family(pi) by pi gives family(pi^-1) for every pi
  /// (the diagonal-flip identification).
  bool inverse_identification_ok = false;
  /// Region family per permutation, in lexicographic permutation order.
  std::vector<Permutation> permutation_list;
  std::vector<SetFamily> family_by_permutation;

  /// Fixed-format key/value table.
  std::string table() const;
};

/// Enumerates all n! canonical arrangements (n <= 6) and groups their
/// region families. The per-permutation work runs on a small thread pool;
/// results are reduced in lexicographic order so output is deterministic.
CensusReport census(int n);

}  // namespace uqdraw

#endif
