#ifndef UQDRAW_FACES_HPP
#define UQDRAW_FACES_HPP

#include <vector>

#include "uqdraw/drawing.hpp"
#include "uqdraw/learning_graph.hpp"

namespace uqdraw {

/// One face of the drawing's planar subdivision. `vertices[k]` and
/// `vertices[k+1]` (cyclically) are joined by `edges[k]`. Interior faces are
/// listed counterclockwise. For interior quadrilaterals with a unique
/// bottom-left vertex the side roles are filled in; otherwise they stay -1
/// and validate_upright_quad reports the face under U3.
struct FaceWalk {
  std::vector<int> vertices;
  std::vector<int> edges;
  bool outer = false;

  int bottom_vertex = -1;
  int top_vertex = -1;
  int bottom_edge = -1;
  int right_edge = -1;
  int top_edge = -1;
  int left_edge = -1;

  bool quad_roles_assigned() const { return bottom_vertex >= 0; }
};

/// Face walks of the straight-line embedding induced by the coordinates,
/// via the angular rotation system (exact integer comparisons). Requires a
/// crossing-free drawing: throws std::invalid_argument when two vertices
/// coincide or two edges improperly intersect (the U1 failures), naming the
/// offending pair. Walks of nonpositive signed area are outer; a connected
/// drawing has exactly one.
std::vector<FaceWalk> extract_faces(const GridDrawing& d, const LearningGraph& g);

}  // namespace uqdraw

#endif
