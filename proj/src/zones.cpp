#include "uqdraw/zones.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "uqdraw/drawing_checks.hpp"

namespace uqdraw {

namespace {

struct Dsu {
  std::vector<int> parent;

  explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

// Source-to-sink edge sequences along the outer boundary. The outer walk is
// clockwise, so the subwalk from source to sink runs up the left side; the
// remainder, reversed, is the right side. The two coincide on bridges. For
// robustness the sides are labeled by comparing the first step's direction
// at the source rather than by trusting an orientation convention.
struct ExteriorPaths {
  std::vector<int> left_edges;
  std::vector<int> right_edges;
};

ExteriorPaths exterior_paths(const GridDrawing& d, const LearningGraph& g,
                             const std::vector<FaceWalk>& faces) {
  ExteriorPaths paths;
  if (g.edge_count() == 0) return paths;

  const FaceWalk* outer = nullptr;
  for (const FaceWalk& f : faces) {
    if (f.outer) {
      if (outer != nullptr) throw std::logic_error("multiple outer faces");
      outer = &f;
    }
  }
  if (outer == nullptr) throw std::logic_error("no outer face");

  const size_t len = outer->vertices.size();
  size_t source_pos = len, sink_pos = len;
  for (size_t k = 0; k < len; ++k) {
    if (outer->vertices[k] == g.source()) {
      if (source_pos != len) throw std::logic_error("source repeats on the outer walk");
      source_pos = k;
    }
    if (outer->vertices[k] == g.sink()) {
      if (sink_pos != len) throw std::logic_error("sink repeats on the outer walk");
      sink_pos = k;
    }
  }
  if (source_pos == len || sink_pos == len) {
    throw std::logic_error("outer walk misses the source or the sink");
  }

  std::vector<int> side_a, side_b;  // walk order and complement
  for (size_t k = source_pos; k != sink_pos; k = (k + 1) % len) {
    side_a.push_back(outer->edges[k]);
  }
  for (size_t k = sink_pos; k != source_pos; k = (k + 1) % len) {
    side_b.push_back(outer->edges[k]);
  }
  std::reverse(side_b.begin(), side_b.end());  // now also source -> sink

  auto first_step = [&](const std::vector<int>& side) {
    const LabeledEdge& e = g.edges()[static_cast<size_t>(side.front())];
    const int other = e.from == g.source() ? e.to : e.from;
    return d.at(other);
  };
  if (side_a.empty() || side_b.empty()) {
    // Degenerate: source == sink is impossible here (edge_count > 0 implies
    // distinct extremes), so both sides are nonempty for valid drawings.
    throw std::logic_error("degenerate outer walk");
  }
  const GridPoint a = first_step(side_a), b = first_step(side_b);
  const GridPoint s = d.at(g.source());
  // Smaller counterclockwise angle from the positive x axis = right path.
  const long long cross = static_cast<long long>(a.x - s.x) * (b.y - s.y) -
                          static_cast<long long>(a.y - s.y) * (b.x - s.x);
  if (cross > 0) {
    paths.right_edges = std::move(side_a);
    paths.left_edges = std::move(side_b);
  } else {
    paths.right_edges = std::move(side_b);
    paths.left_edges = std::move(side_a);
  }
  return paths;
}

}  // namespace

std::vector<Zone> extract_zones(const GridDrawing& d, const LearningGraph& g) {
  const ValidationReport report = validate_upright_quad(d, g);
  if (!report.ok()) {
    throw std::invalid_argument("zones require a valid drawing:\n" +
                                report.summary(g.universe()));
  }
  const std::vector<FaceWalk> faces = extract_faces(d, g);
  const ExteriorPaths paths = exterior_paths(d, g, faces);

  const int m = g.edge_count();
  Dsu dsu(m);
  for (const FaceWalk& f : faces) {
    if (f.outer) continue;
    if (!f.quad_roles_assigned()) {
      throw std::logic_error("valid drawing produced an interior face without roles");
    }
    dsu.unite(f.bottom_edge, f.top_edge);
    dsu.unite(f.left_edge, f.right_edge);
  }

  std::map<int, std::vector<int>> classes;  // root -> ascending edge ids
  for (int e = 0; e < m; ++e) classes[dsu.find(e)].push_back(e);

  std::vector<int> left_pos(static_cast<size_t>(m), -1), right_pos(static_cast<size_t>(m), -1);
  for (size_t k = 0; k < paths.left_edges.size(); ++k) {
    left_pos[static_cast<size_t>(paths.left_edges[k])] = static_cast<int>(k);
  }
  for (size_t k = 0; k < paths.right_edges.size(); ++k) {
    right_pos[static_cast<size_t>(paths.right_edges[k])] = static_cast<int>(k);
  }

  std::vector<Zone> zones;
  for (const auto& [root, edge_ids] : classes) {
    Zone zone;
    zone.edges = edge_ids;

    zone.label = g.edges()[static_cast<size_t>(edge_ids.front())].label;
    for (int e : edge_ids) {
      if (g.edges()[static_cast<size_t>(e)].label != zone.label) {
        throw std::logic_error("zone mixes edge labels");
      }
    }

    for (int e : edge_ids) {
      if (left_pos[static_cast<size_t>(e)] >= 0) {
        if (zone.left_exterior_edge >= 0) throw std::logic_error("zone meets the left path twice");
        zone.left_exterior_edge = e;
      }
      if (right_pos[static_cast<size_t>(e)] >= 0) {
        if (zone.right_exterior_edge >= 0) throw std::logic_error("zone meets the right path twice");
        zone.right_exterior_edge = e;
      }
    }
    if (zone.left_exterior_edge < 0 || zone.right_exterior_edge < 0) {
      throw std::logic_error("zone does not reach both exterior paths");
    }
    zone.bridge = edge_ids.size() == 1;

    // Chain the faces from the left exterior edge inward. Within a zone
    // every face exposes one paired side pair; consecutive faces share one
    // of the class's edges.
    std::map<int, std::vector<size_t>> edge_faces;  // class edge -> face indices
    std::map<size_t, std::pair<int, int>> face_sides;
    for (size_t fi = 0; fi < faces.size(); ++fi) {
      const FaceWalk& f = faces[fi];
      if (f.outer) continue;
      std::pair<int, int> sides{-1, -1};
      if (dsu.find(f.bottom_edge) == root) sides = {f.bottom_edge, f.top_edge};
      if (dsu.find(f.left_edge) == root) {
        if (sides.first >= 0) throw std::logic_error("face joins one zone twice");
        sides = {f.left_edge, f.right_edge};
      }
      if (sides.first < 0) continue;
      face_sides[fi] = sides;
      edge_faces[sides.first].push_back(fi);
      edge_faces[sides.second].push_back(fi);
    }
    int cur_edge = zone.left_exterior_edge;
    size_t prev_face = faces.size();
    while (true) {
      size_t next_face = faces.size();
      for (size_t fi : edge_faces[cur_edge]) {
        if (fi != prev_face) next_face = fi;
      }
      if (next_face == faces.size()) break;
      const auto [s0, s1] = face_sides[next_face];
      zone.faces.push_back(faces[next_face]);
      cur_edge = (cur_edge == s0) ? s1 : s0;
      prev_face = next_face;
    }
    if (cur_edge != zone.right_exterior_edge || zone.faces.size() != face_sides.size()) {
      throw std::logic_error("zone faces do not form a single chain");
    }
    zones.push_back(std::move(zone));
  }

  std::sort(zones.begin(), zones.end(), [&](const Zone& a, const Zone& b) {
    return right_pos[static_cast<size_t>(a.right_exterior_edge)] <
           right_pos[static_cast<size_t>(b.right_exterior_edge)];
  });
  return zones;
}

QuadrantArrangement drawing_to_arrangement(const GridDrawing& d, const LearningGraph& g) {
  const std::vector<Zone> zones = extract_zones(d, g);
  const int n = g.universe().size();
  if (static_cast<int>(zones.size()) != n) {
    throw std::invalid_argument("drawing has " + std::to_string(zones.size()) +
                                " zones for a universe of " + std::to_string(n));
  }
  // Zones arrive in right-path order, so zone index = x rank. The y rank is
  // the zone's position along the left path.
  std::vector<int> by_left(static_cast<size_t>(n));
  std::iota(by_left.begin(), by_left.end(), 0);

  std::vector<FaceWalk> faces = extract_faces(d, g);
  const ExteriorPaths paths = exterior_paths(d, g, faces);
  std::vector<int> left_pos(static_cast<size_t>(g.edge_count()), -1);
  for (size_t k = 0; k < paths.left_edges.size(); ++k) {
    left_pos[static_cast<size_t>(paths.left_edges[k])] = static_cast<int>(k);
  }
  std::sort(by_left.begin(), by_left.end(), [&](int a, int b) {
    return left_pos[static_cast<size_t>(zones[static_cast<size_t>(a)].left_exterior_edge)] <
           left_pos[static_cast<size_t>(zones[static_cast<size_t>(b)].left_exterior_edge)];
  });

  std::vector<Corner> corners(static_cast<size_t>(n));
  for (int x_rank = 0; x_rank < n; ++x_rank) {
    corners[static_cast<size_t>(zones[static_cast<size_t>(x_rank)].label)].x = x_rank;
  }
  for (int y_rank = 0; y_rank < n; ++y_rank) {
    corners[static_cast<size_t>(zones[static_cast<size_t>(by_left[static_cast<size_t>(y_rank)])].label)]
        .y = y_rank;
  }
  return QuadrantArrangement(g.universe(), std::move(corners));
}

}  // namespace uqdraw
