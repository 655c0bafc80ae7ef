#ifndef UQDRAW_DRAWING_CHECKS_HPP
#define UQDRAW_DRAWING_CHECKS_HPP

#include "uqdraw/drawing.hpp"
#include "uqdraw/learning_graph.hpp"
#include "uqdraw/report.hpp"

namespace uqdraw {

/// Checks the three upright-quad drawing axioms. U1: distinct vertex
/// locations and no improper segment intersections. U2: orienting every
/// edge by coordinatewise dominance, each edge is orientable and there is
/// exactly one local minimum and one local maximum. U3: every interior face
/// (skipped when U1 fails, since faces are then undefined) is an upright
/// quadrilateral whose sides are drawing edges. All failures are report
/// entries; nothing throws.
ValidationReport validate_upright_quad(const GridDrawing& d, const LearningGraph& g);

/// Dominance property: u's coordinates are coordinatewise <= v's exactly
/// when v is reachable from u in the dominance orientation. Reachability is
/// an independent BFS. Usable on invalid drawings (unorientable edges are
/// reported and skipped).
ValidationReport check_dominance(const GridDrawing& d, const LearningGraph& g);

}  // namespace uqdraw

#endif
