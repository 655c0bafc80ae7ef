#ifndef UQDRAW_ZONES_HPP
#define UQDRAW_ZONES_HPP

#include <vector>

#include "uqdraw/arrangement.hpp"
#include "uqdraw/drawing.hpp"
#include "uqdraw/faces.hpp"
#include "uqdraw/learning_graph.hpp"

namespace uqdraw {

/// Equivalence class of edges linked across opposite sides of interior
/// quadrilaterals (bottom~top, left~right) together with the face chain it
/// crosses. A bridge forms a singleton zone with no faces and both exterior
/// endpoints equal to the bridge itself. In a drawing of a learning space
/// all edges of a zone carry the same element label.
struct Zone {
  int label = -1;               // element index shared by every edge
  std::vector<int> edges;       // edge ids, ascending
  std::vector<FaceWalk> faces;  // ordered from the left exterior edge inward
  int left_exterior_edge = -1;  // edge id on the left exterior path
  int right_exterior_edge = -1; // edge id on the right exterior path
  bool bridge = false;
};

/// Zones of a valid drawing, ordered by where they meet the right exterior
/// path (bottom to top). Throws std::invalid_argument when the drawing
/// fails validate_upright_quad and std::logic_error if the zone structure
/// degenerates (impossible for valid drawings).
std::vector<Zone> extract_zones(const GridDrawing& d, const LearningGraph& g);

/// The canonical quadrant arrangement whose region graph reproduces the
/// drawing: the x-order of corners is the zones' right-path order and the
/// y-order is their left-path order.
QuadrantArrangement drawing_to_arrangement(const GridDrawing& d, const LearningGraph& g);

}  // namespace uqdraw

#endif
