#include "uqdraw/drawing_checks.hpp"

#include <deque>

#include "geometry_detail.hpp"
#include "uqdraw/faces.hpp"

namespace uqdraw {

namespace {

void check_u2(const GridDrawing& d, const LearningGraph& g, ValidationReport& report) {
  using detail::dominates_eq;
  for (const LabeledEdge& e : g.edges()) {
    if (!dominates_eq(d.at(e.from), d.at(e.to)) &&
        !dominates_eq(d.at(e.to), d.at(e.from))) {
      report.add(Axiom::U2, {g.vertex(e.from), g.vertex(e.to)},
                 "edge cannot be oriented by dominance");
    }
  }
  int minima = 0, maxima = 0;
  StateSet min_witness, max_witness;
  for (int v = 0; v < g.vertex_count(); ++v) {
    bool is_min = true, is_max = true;
    auto visit = [&](int u) {
      if (!dominates_eq(d.at(v), d.at(u))) is_min = false;
      if (!dominates_eq(d.at(u), d.at(v))) is_max = false;
    };
    for (int e : g.out_edges(v)) visit(g.edges()[static_cast<size_t>(e)].to);
    for (int e : g.in_edges(v)) visit(g.edges()[static_cast<size_t>(e)].from);
    if (is_min) {
      ++minima;
      min_witness = g.vertex(v);
    }
    if (is_max) {
      ++maxima;
      max_witness = g.vertex(v);
    }
  }
  if (minima != 1) {
    report.add(Axiom::U2, minima > 0 ? std::vector<StateSet>{min_witness}
                                     : std::vector<StateSet>{},
               std::to_string(minima) + " local minima (need exactly 1)");
  }
  if (maxima != 1) {
    report.add(Axiom::U2, maxima > 0 ? std::vector<StateSet>{max_witness}
                                     : std::vector<StateSet>{},
               std::to_string(maxima) + " local maxima (need exactly 1)");
  }
}

void check_u3(const GridDrawing& d, const LearningGraph& g, ValidationReport& report) {
  for (const FaceWalk& face : extract_faces(d, g)) {
    if (face.outer) continue;
    std::vector<StateSet> witness;
    for (int v : face.vertices) witness.push_back(g.vertex(v));
    if (face.vertices.size() != 4) {
      report.add(Axiom::U3, std::move(witness),
                 "interior face has " + std::to_string(face.vertices.size()) +
                     " sides (need 4)");
      continue;
    }
    if (!face.quad_roles_assigned()) {
      report.add(Axiom::U3, std::move(witness),
                 "interior face is not an upright quadrilateral");
      continue;
    }
    const GridPoint b = d.at(face.bottom_vertex);
    const GridPoint t = d.at(face.top_vertex);
    // Walk order from the bottom corner: bottom-right then top then top-left.
    const GridPoint br = d.at(g.edges()[static_cast<size_t>(face.bottom_edge)].from ==
                                      face.bottom_vertex
                                  ? g.edges()[static_cast<size_t>(face.bottom_edge)].to
                                  : g.edges()[static_cast<size_t>(face.bottom_edge)].from);
    const GridPoint tl = d.at(g.edges()[static_cast<size_t>(face.left_edge)].from ==
                                      face.bottom_vertex
                                  ? g.edges()[static_cast<size_t>(face.left_edge)].to
                                  : g.edges()[static_cast<size_t>(face.left_edge)].from);
    // Upright pattern: x_b = x_tl < x_br <= x_t and y_b = y_br < y_tl <= y_t.
    const bool ok = tl.x == b.x && br.y == b.y && b.x < br.x && br.x <= t.x &&
                    b.y < tl.y && tl.y <= t.y;
    if (!ok) {
      report.add(Axiom::U3, std::move(witness),
                 "interior face is not an upright quadrilateral");
    }
  }
}

}  // namespace

ValidationReport validate_upright_quad(const GridDrawing& d, const LearningGraph& g) {
  ValidationReport report = detail::u1_report(d, g);
  const bool u1_ok = report.ok();
  check_u2(d, g, report);
  if (u1_ok) {
    check_u3(d, g, report);  // faces are defined only for crossing-free drawings
  }
  return report;
}

ValidationReport check_dominance(const GridDrawing& d, const LearningGraph& g) {
  using detail::dominates_eq;
  ValidationReport report;
  const int n = g.vertex_count();

  std::vector<std::vector<int>> out(static_cast<size_t>(n));
  for (const LabeledEdge& e : g.edges()) {
    if (dominates_eq(d.at(e.from), d.at(e.to))) {
      out[static_cast<size_t>(e.from)].push_back(e.to);
    } else if (dominates_eq(d.at(e.to), d.at(e.from))) {
      out[static_cast<size_t>(e.to)].push_back(e.from);
    } else {
      report.add(Axiom::Dominance, {g.vertex(e.from), g.vertex(e.to)},
                 "edge cannot be oriented by dominance");
    }
  }

  std::vector<std::vector<bool>> reach(static_cast<size_t>(n),
                                       std::vector<bool>(static_cast<size_t>(n), false));
  for (int s = 0; s < n; ++s) {
    std::deque<int> queue{s};
    reach[static_cast<size_t>(s)][static_cast<size_t>(s)] = true;
    while (!queue.empty()) {
      const int cur = queue.front();
      queue.pop_front();
      for (int nxt : out[static_cast<size_t>(cur)]) {
        if (!reach[static_cast<size_t>(s)][static_cast<size_t>(nxt)]) {
          reach[static_cast<size_t>(s)][static_cast<size_t>(nxt)] = true;
          queue.push_back(nxt);
        }
      }
    }
  }

  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      const bool dom = dominates_eq(d.at(u), d.at(v));
      const bool rch = reach[static_cast<size_t>(u)][static_cast<size_t>(v)];
      if (dom && !rch) {
        report.add(Axiom::Dominance, {g.vertex(u), g.vertex(v)},
                   "dominated but unreachable");
      } else if (!dom && rch) {
        report.add(Axiom::Dominance, {g.vertex(u), g.vertex(v)},
                   "reachable but not dominated");
      }
    }
  }
  return report;
}

}  // namespace uqdraw
