#ifndef UQDRAW_GEOMETRY_DETAIL_HPP
#define UQDRAW_GEOMETRY_DETAIL_HPP

#include "uqdraw/drawing.hpp"
#include "uqdraw/learning_graph.hpp"
#include "uqdraw/report.hpp"

namespace uqdraw::detail {

// U1 scan shared by extract_faces and validate_upright_quad: coincident
// vertices, vertices on edge interiors, and crossings between edges with no
// common endpoint. All arithmetic is exact in 64-bit integers.
ValidationReport u1_report(const GridDrawing& d, const LearningGraph& g);

inline long long cross3(const GridPoint& a, const GridPoint& b, const GridPoint& c) {
  return static_cast<long long>(b.x - a.x) * (c.y - a.y) -
         static_cast<long long>(b.y - a.y) * (c.x - a.x);
}

inline bool dominates_eq(const GridPoint& a, const GridPoint& b) {
  return a.x <= b.x && a.y <= b.y;  // b dominates a (weakly)
}

}  // namespace uqdraw::detail

#endif
