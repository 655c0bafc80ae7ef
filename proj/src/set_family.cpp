#include "uqdraw/set_family.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace uqdraw {

namespace {

bool token_safe(const std::string& s) {
  if (s.empty() || s.front() == '#') return false;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') return false;
  }
  return true;
}

}  // namespace

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > static_cast<size_t>(kMaxElements)) {
    throw std::invalid_argument("universe exceeds " + std::to_string(kMaxElements) +
                                " elements");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names_) {
    if (!token_safe(n)) {
      throw std::invalid_argument("invalid element name '" + n + "'");
    }
    if (!seen.insert(n).second) {
      throw std::invalid_argument("duplicate element name '" + n + "'");
    }
  }
}

int Universe::index(std::string_view name) const {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::uint64_t Universe::full_mask() const {
  const int n = size();
  if (n == 0) return 0;
  if (n == 64) return ~std::uint64_t{0};
  return (std::uint64_t{1} << n) - 1;
}

int StateSet::count() const { return std::popcount(bits_); }

std::vector<int> StateSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(count()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b));
  }
  return out;
}

std::string to_string(StateSet s, const Universe& u) {
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += ",";
    out += u.name(e);
    first = false;
  }
  out += "}";
  return out;
}

SetFamily::SetFamily(Universe universe, std::vector<StateSet> states)
    : universe_(std::move(universe)), states_(std::move(states)) {
  const std::uint64_t full = universe_.full_mask();
  for (StateSet s : states_) {
    if ((s.bits() & ~full) != 0) {
      throw std::invalid_argument("state has elements outside the universe");
    }
  }
  std::sort(states_.begin(), states_.end(), canonical_less);
  states_.erase(std::unique(states_.begin(), states_.end()), states_.end());
}

bool SetFamily::contains(StateSet s) const { return index_of(s) >= 0; }

int SetFamily::index_of(StateSet s) const {
  auto it = std::lower_bound(states_.begin(), states_.end(), s, canonical_less);
  if (it != states_.end() && *it == s) {
    return static_cast<int>(it - states_.begin());
  }
  return -1;
}

StateSet SetFamily::union_of_states() const {
  StateSet u;
  for (StateSet s : states_) u = u | s;
  return u;
}

SetFamily prefix_suffix_family(const Universe& u) {
  const int n = u.size();
  std::vector<StateSet> states;
  auto low_bits = [](int k) {
    return (k >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
  };
  for (int i = 0; i <= n; ++i) {
    const std::uint64_t prefix = low_bits(i);
    for (int j = 0; j <= n; ++j) {
      const std::uint64_t suffix = u.full_mask() & ~low_bits(n - j);
      states.push_back(StateSet(prefix | suffix));
    }
  }
  return SetFamily(u, std::move(states));
}

SetFamily power_set_family(const Universe& u) {
  const int n = u.size();
  if (n > 20) throw std::invalid_argument("power set too large");
  std::vector<StateSet> states;
  states.reserve(size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    states.push_back(StateSet(m));
  }
  return SetFamily(u, std::move(states));
}

}  // namespace uqdraw
