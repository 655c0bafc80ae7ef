#include "uqdraw/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace uqdraw {

Permutation::Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
  const int n = static_cast<int>(map_.size());
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : map_) {
    if (v < 0 || v >= n || seen[static_cast<size_t>(v)]) {
      throw std::invalid_argument("permutation values must be a bijection on 0..n-1");
    }
    seen[static_cast<size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> m(static_cast<size_t>(n));
  std::iota(m.begin(), m.end(), 0);
  return Permutation(std::move(m));
}

Permutation Permutation::reversed(int n) {
  std::vector<int> m(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)] = n - 1 - i;
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(map_.size());
  for (int i = 0; i < size(); ++i) inv[static_cast<size_t>(map_[static_cast<size_t>(i)])] = i;
  return Permutation(std::move(inv));
}

long long Permutation::inversions() const {
  long long count = 0;
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      if ((*this)[i] > (*this)[j]) ++count;
    }
  }
  return count;
}

QuadrantArrangement::QuadrantArrangement(Universe universe, std::vector<Corner> corners)
    : universe_(std::move(universe)), corners_(std::move(corners)) {
  if (static_cast<int>(corners_.size()) != universe_.size()) {
    throw std::invalid_argument("one corner per universe element required");
  }
  for (size_t i = 0; i < corners_.size(); ++i) {
    for (size_t j = i + 1; j < corners_.size(); ++j) {
      if (corners_[i].x == corners_[j].x || corners_[i].y == corners_[j].y) {
        throw std::invalid_argument("corner coordinates must be pairwise distinct per axis");
      }
    }
  }
}

QuadrantArrangement QuadrantArrangement::canonical() const {
  const int n = size();
  std::vector<int> by_x(static_cast<size_t>(n)), by_y(static_cast<size_t>(n));
  std::iota(by_x.begin(), by_x.end(), 0);
  std::iota(by_y.begin(), by_y.end(), 0);
  std::sort(by_x.begin(), by_x.end(),
            [&](int a, int b) { return corner(a).x < corner(b).x; });
  std::sort(by_y.begin(), by_y.end(),
            [&](int a, int b) { return corner(a).y < corner(b).y; });
  std::vector<Corner> ranked(static_cast<size_t>(n));
  for (int r = 0; r < n; ++r) {
    ranked[static_cast<size_t>(by_x[static_cast<size_t>(r)])].x = r;
    ranked[static_cast<size_t>(by_y[static_cast<size_t>(r)])].y = r;
  }
  return QuadrantArrangement(universe_, std::move(ranked));
}

bool QuadrantArrangement::is_canonical() const {
  const int n = size();
  std::vector<bool> xs(static_cast<size_t>(n), false), ys(static_cast<size_t>(n), false);
  for (const Corner& c : corners_) {
    if (c.x < 0 || c.x >= n || c.y < 0 || c.y >= n) return false;
    xs[static_cast<size_t>(c.x)] = true;  // duplicates are impossible here
    ys[static_cast<size_t>(c.y)] = true;
  }
  for (int i = 0; i < n; ++i) {
    if (!xs[static_cast<size_t>(i)] || !ys[static_cast<size_t>(i)]) return false;
  }
  return true;
}

QuadrantArrangement from_permutation(const std::vector<std::string>& names,
                                     const Permutation& pi) {
  if (static_cast<int>(names.size()) != pi.size()) {
    throw std::invalid_argument("name count must match permutation size");
  }
  std::vector<Corner> corners(names.size());
  for (int i = 0; i < pi.size(); ++i) {
    corners[static_cast<size_t>(i)] = {i, pi[i]};
  }
  return QuadrantArrangement(Universe(names), std::move(corners));
}

Permutation arrangement_permutation(const QuadrantArrangement& a) {
  const QuadrantArrangement c = a.canonical();
  std::vector<int> pi(static_cast<size_t>(c.size()));
  for (int e = 0; e < c.size(); ++e) {
    pi[static_cast<size_t>(c.corner(e).x)] = c.corner(e).y;
  }
  return Permutation(std::move(pi));
}

SetFamily region_family(const QuadrantArrangement& a, int resolution) {
  if (resolution < 1) throw std::invalid_argument("resolution must be positive");
  const QuadrantArrangement c = a.canonical();
  const int n = c.size();
  // Sample coordinates (2k+1)/(2r) - 1 for k = 0..(n+1)r-1 cover every cell
  // of the integer grid refinement and avoid all boundary lines. Comparisons
  // are done in integers scaled by 2r.
  const long long scale = 2LL * resolution;
  const int samples = (n + 1) * resolution;
  std::vector<StateSet> sets;
  sets.reserve(static_cast<size_t>(samples) * static_cast<size_t>(samples));
  for (int si = 0; si < samples; ++si) {
    const long long px = 2LL * si + 1 - scale;
    for (int sj = 0; sj < samples; ++sj) {
      const long long py = 2LL * sj + 1 - scale;
      std::uint64_t mask = 0;
      for (int e = 0; e < n; ++e) {
        if (scale * c.corner(e).x < px || scale * c.corner(e).y < py) {
          mask |= std::uint64_t{1} << e;
        }
      }
      sets.push_back(StateSet(mask));
    }
  }
  return SetFamily(c.universe(), std::move(sets));
}

LearningGraph region_graph(const QuadrantArrangement& a) {
  return build_graph(region_family(a));
}

long long count_regions(const QuadrantArrangement& a) {
  return 1 + a.size() + arrangement_permutation(a).inversions();
}

}  // namespace uqdraw
