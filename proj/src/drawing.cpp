#include "uqdraw/drawing.hpp"

#include <algorithm>
#include <stdexcept>

#include "uqdraw/drawing_checks.hpp"

namespace uqdraw {

int GridDrawing::max_x() const {
  int m = 0;
  for (const GridPoint& p : coords_) m = std::max(m, p.x);
  return m;
}

int GridDrawing::max_y() const {
  int m = 0;
  for (const GridPoint& p : coords_) m = std::max(m, p.y);
  return m;
}

namespace {

void require_orders(const SetFamily& f, const BoundaryOrders& orders) {
  const int n = f.universe().size();
  auto check_order = [&](const std::vector<int>& order, const char* which) {
    if (static_cast<int>(order.size()) != n) {
      throw std::invalid_argument(std::string(which) + "-order has wrong length");
    }
    StateSet prefix;
    for (int e : order) {
      if (e < 0 || e >= n || prefix.contains(e)) {
        throw std::invalid_argument(std::string(which) +
                                    "-order is not a permutation of the universe");
      }
      prefix = prefix.with(e);
      if (!f.contains(prefix)) {
        throw std::invalid_argument(std::string(which) + "-order prefix " +
                                    to_string(prefix, f.universe()) + " is not a state");
      }
    }
  };
  check_order(orders.x_order, "x");
  check_order(orders.y_order, "y");
}

int first_missing_index(const std::vector<int>& order, StateSet s) {
  for (size_t i = 0; i < order.size(); ++i) {
    if (!s.contains(order[i])) return static_cast<int>(i);
  }
  return static_cast<int>(order.size());
}

}  // namespace

GridDrawing assign_coordinates(const SetFamily& f, const BoundaryOrders& orders) {
  require_orders(f, orders);
  std::vector<GridPoint> coords;
  coords.reserve(static_cast<size_t>(f.size()));
  for (StateSet s : f.states()) {
    coords.push_back({first_missing_index(orders.x_order, s),
                      first_missing_index(orders.y_order, s)});
  }
  return GridDrawing(std::move(coords));
}

namespace {

GridDrawing merged(const GridDrawing& d, bool x_axis, int value) {
  GridDrawing out = d;
  for (int v = 0; v < out.size(); ++v) {
    int& c = x_axis ? out.at(v).x : out.at(v).y;
    if (c > value) c -= 1;
  }
  return out;
}

GridDrawing normalized(const GridDrawing& d) {
  auto pack = [&](bool x_axis, GridDrawing in) {
    std::vector<int> values;
    for (const GridPoint& p : in.coords()) values.push_back(x_axis ? p.x : p.y);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    GridDrawing out = in;
    for (int v = 0; v < out.size(); ++v) {
      int& c = x_axis ? out.at(v).x : out.at(v).y;
      c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) -
                           values.begin());
    }
    return out;
  };
  return pack(false, pack(true, d));
}

bool acceptable(const GridDrawing& d, const LearningGraph& g) {
  return validate_upright_quad(d, g).ok() && check_dominance(d, g).ok();
}

}  // namespace

GridDrawing compact(const GridDrawing& d, const LearningGraph& g) {
  const ValidationReport report = validate_upright_quad(d, g);
  if (!report.ok()) {
    throw std::invalid_argument("compaction requires a valid drawing:\n" +
                                report.summary(g.universe()));
  }
  GridDrawing cur = d;
  // Unoccupied coordinate values are dropped first (rank packing keeps the
  // per-axis order type); the validator gate still has the final word.
  GridDrawing packed = normalized(cur);
  if (!(packed == cur) && acceptable(packed, g)) cur = std::move(packed);

  bool changed = true;
  while (changed) {
    changed = false;
    for (int axis = 0; axis < 2; ++axis) {
      const bool x_axis = axis == 0;
      int value = 0;
      while (value + 1 <= (x_axis ? cur.max_x() : cur.max_y())) {
        GridDrawing candidate = merged(cur, x_axis, value);
        if (acceptable(candidate, g)) {
          cur = std::move(candidate);
          changed = true;  // retry the same value: everything above shifted down
        } else {
          ++value;
        }
      }
    }
  }
  return cur;
}

}  // namespace uqdraw
