#ifndef UQDRAW_SET_FAMILY_HPP
#define UQDRAW_SET_FAMILY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace uqdraw {

/// Ordered ground set of element names. An element's index is its position
/// in declaration order. At most 64 elements, so a state fits one machine
/// word; a multi-word mask is the documented extension point if that ever
/// becomes too small.
class Universe {
 public:
  static constexpr int kMaxElements = 64;

  Universe() = default;
  /// Names must be nonempty, distinct, and token-safe (no whitespace, no '#').
  explicit Universe(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(static_cast<size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of a name, -1 if unknown.
  int index(std::string_view name) const;
  /// Mask with one bit per element.
  std::uint64_t full_mask() const;

  bool operator==(const Universe& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

/// Subset of a universe, one bit per element index.
class StateSet {
 public:
  constexpr StateSet() = default;
  constexpr explicit StateSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr StateSet empty_set() { return StateSet(0); }

  std::uint64_t bits() const { return bits_; }
  bool contains(int e) const { return (bits_ >> e) & 1u; }
  bool is_empty() const { return bits_ == 0; }
  int count() const;

  StateSet with(int e) const { return StateSet(bits_ | (std::uint64_t{1} << e)); }
  StateSet without(int e) const { return StateSet(bits_ & ~(std::uint64_t{1} << e)); }

  StateSet operator|(StateSet o) const { return StateSet(bits_ | o.bits_); }
  StateSet operator&(StateSet o) const { return StateSet(bits_ & o.bits_); }
  StateSet operator-(StateSet o) const { return StateSet(bits_ & ~o.bits_); }
  StateSet operator^(StateSet o) const { return StateSet(bits_ ^ o.bits_); }

  bool subset_of(StateSet o) const { return (bits_ & o.bits_) == bits_; }
  bool operator==(const StateSet& o) const = default;

  /// Element indices in increasing order.
  std::vector<int> elements() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical order used everywhere: by cardinality, then by mask value.
inline bool canonical_less(StateSet a, StateSet b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return a.bits() < b.bits();
}

/// "{a,c}" under the given universe; "{}" when empty.
std::string to_string(StateSet s, const Universe& u);

/// Deduplicated family of states over a universe, kept in canonical
/// (cardinality, mask) order.
class SetFamily {
 public:
  SetFamily() = default;
  /// Sorts into canonical order and drops duplicates. States must fit the
  /// universe.
  SetFamily(Universe universe, std::vector<StateSet> states);

  const Universe& universe() const { return universe_; }
  const std::vector<StateSet>& states() const { return states_; }
  int size() const { return static_cast<int>(states_.size()); }
  const StateSet& state(int i) const { return states_.at(static_cast<size_t>(i)); }

  bool contains(StateSet s) const;
  /// Position in canonical order, -1 if absent.
  int index_of(StateSet s) const;
  /// Union of all member states.
  StateSet union_of_states() const;

  bool operator==(const SetFamily& o) const {
    return universe_ == o.universe_ && states_ == o.states_;
  }

 private:
  Universe universe_;
  std::vector<StateSet> states_;
};

/// The family of all unions of a prefix and a suffix of the universe order.
/// Has exactly 1 + (n+1)n/2 distinct states.
SetFamily prefix_suffix_family(const Universe& u);

/// The family of all subsets of the universe (n <= 20 guard).
SetFamily power_set_family(const Universe& u);

}  // namespace uqdraw

#endif
