#include "uqdraw/faces.hpp"

#include <algorithm>
#include <stdexcept>

#include "geometry_detail.hpp"

namespace uqdraw {

namespace detail {

namespace {

bool on_closed_segment(const GridPoint& a, const GridPoint& b, const GridPoint& p) {
  if (cross3(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

int sgn(long long v) { return (v > 0) - (v < 0); }

// Any common point of the two closed segments.
bool segments_touch(const GridPoint& a, const GridPoint& b, const GridPoint& c,
                    const GridPoint& d) {
  const long long d1 = cross3(c, d, a), d2 = cross3(c, d, b);
  const long long d3 = cross3(a, b, c), d4 = cross3(a, b, d);
  if (sgn(d1) * sgn(d2) < 0 && sgn(d3) * sgn(d4) < 0) return true;
  if (d1 == 0 && on_closed_segment(c, d, a)) return true;
  if (d2 == 0 && on_closed_segment(c, d, b)) return true;
  if (d3 == 0 && on_closed_segment(a, b, c)) return true;
  if (d4 == 0 && on_closed_segment(a, b, d)) return true;
  return false;
}

}  // namespace

ValidationReport u1_report(const GridDrawing& d, const LearningGraph& g) {
  ValidationReport report;
  const int v = g.vertex_count();

  bool coincident = false;
  for (int i = 0; i < v; ++i) {
    for (int j = i + 1; j < v; ++j) {
      if (d.at(i) == d.at(j)) {
        report.add(Axiom::U1, {g.vertex(i), g.vertex(j)}, "coincident vertices");
        coincident = true;
      }
    }
  }
  if (coincident) return report;  // segment geometry is meaningless now

  // A vertex inside a non-incident edge breaks the straight-line embedding
  // even when no two segments cross.
  for (int w = 0; w < v; ++w) {
    for (const LabeledEdge& e : g.edges()) {
      if (w == e.from || w == e.to) continue;
      if (on_closed_segment(d.at(e.from), d.at(e.to), d.at(w))) {
        report.add(Axiom::U1, {g.vertex(w), g.vertex(e.from), g.vertex(e.to)},
                   "vertex lies on an edge");
      }
    }
  }

  const auto& edges = g.edges();
  for (size_t i = 0; i < edges.size(); ++i) {
    for (size_t j = i + 1; j < edges.size(); ++j) {
      const LabeledEdge& e = edges[i];
      const LabeledEdge& f = edges[j];
      if (e.from == f.from || e.from == f.to || e.to == f.from || e.to == f.to) {
        continue;  // touching at shared vertices is covered by the scans above
      }
      if (segments_touch(d.at(e.from), d.at(e.to), d.at(f.from), d.at(f.to))) {
        report.add(Axiom::U1,
                   {g.vertex(e.from), g.vertex(e.to), g.vertex(f.from), g.vertex(f.to)},
                   "edges intersect");
      }
    }
  }
  return report;
}

}  // namespace detail

namespace {

// Dart id = 2*edge + (0: from->to, 1: to->from).
int dart_tail(const LearningGraph& g, int dart) {
  const LabeledEdge& e = g.edges()[static_cast<size_t>(dart / 2)];
  return (dart % 2 == 0) ? e.from : e.to;
}

int dart_head(const LearningGraph& g, int dart) {
  const LabeledEdge& e = g.edges()[static_cast<size_t>(dart / 2)];
  return (dart % 2 == 0) ? e.to : e.from;
}

// Counterclockwise angular order starting at the positive x axis.
struct AngleLess {
  const GridDrawing& d;
  const LearningGraph& g;

  bool operator()(int da, int db) const {
    const GridPoint ta = d.at(dart_tail(g, da)), ha = d.at(dart_head(g, da));
    const GridPoint tb = d.at(dart_tail(g, db)), hb = d.at(dart_head(g, db));
    const long long ax = ha.x - ta.x, ay = ha.y - ta.y;
    const long long bx = hb.x - tb.x, by = hb.y - tb.y;
    const int half_a = (ay < 0 || (ay == 0 && ax < 0)) ? 1 : 0;
    const int half_b = (by < 0 || (by == 0 && bx < 0)) ? 1 : 0;
    if (half_a != half_b) return half_a < half_b;
    return ax * by - ay * bx > 0;
  }
};

long long twice_signed_area(const GridDrawing& d, const std::vector<int>& walk) {
  long long area2 = 0;
  for (size_t k = 0; k < walk.size(); ++k) {
    const GridPoint& a = d.at(walk[k]);
    const GridPoint& b = d.at(walk[(k + 1) % walk.size()]);
    area2 += static_cast<long long>(a.x) * b.y - static_cast<long long>(b.x) * a.y;
  }
  return area2;
}

void assign_quad_roles(FaceWalk& face, const GridDrawing& d) {
  if (face.vertices.size() != 4) return;
  std::vector<int> sorted = face.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return;

  int bottom = -1;
  for (int k = 0; k < 4; ++k) {
    const GridPoint& p = d.at(face.vertices[static_cast<size_t>(k)]);
    bool minimal = true;
    for (int m = 0; m < 4; ++m) {
      const GridPoint& q = d.at(face.vertices[static_cast<size_t>(m)]);
      if (q.x < p.x || q.y < p.y) {
        minimal = false;
        break;
      }
    }
    if (minimal) {
      if (bottom >= 0) return;  // not unique
      bottom = k;
    }
  }
  if (bottom < 0) return;

  const auto vert = [&](int k) { return face.vertices[static_cast<size_t>((bottom + k) % 4)]; };
  const auto edge = [&](int k) { return face.edges[static_cast<size_t>((bottom + k) % 4)]; };
  // Counterclockwise from the bottom corner: right along the bottom edge
  // first, back down the left edge last.
  if (d.at(vert(1)).y != d.at(vert(0)).y) return;  // bottom side must be horizontal
  if (d.at(vert(3)).x != d.at(vert(0)).x) return;  // left side must be vertical
  face.bottom_vertex = vert(0);
  face.top_vertex = vert(2);
  face.bottom_edge = edge(0);
  face.right_edge = edge(1);
  face.top_edge = edge(2);
  face.left_edge = edge(3);
}

}  // namespace

std::vector<FaceWalk> extract_faces(const GridDrawing& d, const LearningGraph& g) {
  const ValidationReport u1 = detail::u1_report(d, g);
  if (!u1.ok()) {
    throw std::invalid_argument("drawing is not a planar straight-line embedding:\n" +
                                u1.summary(g.universe()));
  }

  const int dart_count = 2 * g.edge_count();
  std::vector<std::vector<int>> rotation(static_cast<size_t>(g.vertex_count()));
  for (int dart = 0; dart < dart_count; ++dart) {
    rotation[static_cast<size_t>(dart_tail(g, dart))].push_back(dart);
  }
  for (auto& darts : rotation) {
    std::sort(darts.begin(), darts.end(), AngleLess{d, g});
  }
  // next dart of a face walk: the clockwise successor (counterclockwise
  // predecessor) of the reversed dart at the head vertex; interior faces
  // come out counterclockwise.
  std::vector<int> next(static_cast<size_t>(dart_count), -1);
  for (const auto& darts : rotation) {
    for (size_t k = 0; k < darts.size(); ++k) {
      const int dart = darts[k];
      const int reversed = dart ^ 1;
      next[static_cast<size_t>(reversed)] = darts[(k + darts.size() - 1) % darts.size()];
    }
  }

  std::vector<FaceWalk> faces;
  std::vector<bool> used(static_cast<size_t>(dart_count), false);
  for (int start = 0; start < dart_count; ++start) {
    if (used[static_cast<size_t>(start)]) continue;
    FaceWalk face;
    int dart = start;
    do {
      used[static_cast<size_t>(dart)] = true;
      face.vertices.push_back(dart_tail(g, dart));
      face.edges.push_back(dart / 2);
      dart = next[static_cast<size_t>(dart)];
    } while (dart != start);
    face.outer = twice_signed_area(d, face.vertices) <= 0;
    if (!face.outer) assign_quad_roles(face, d);
    faces.push_back(std::move(face));
  }
  return faces;
}

}  // namespace uqdraw
