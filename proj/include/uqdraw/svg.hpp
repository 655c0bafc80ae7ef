#ifndef UQDRAW_SVG_HPP
#define UQDRAW_SVG_HPP

#include <string>

#include "uqdraw/drawing.hpp"
#include "uqdraw/learning_graph.hpp"
#include "uqdraw/report.hpp"

namespace uqdraw {

struct SvgOptions {
  int unit = 48;        // pixels per grid step
  bool labels = false;  // element names on edges, state names on vertices
  bool strict = true;   // throw on invalid drawings; else render regardless
};

/// Deterministic SVG text for a drawing: one line per edge, one circle per
/// vertex, geometry in a y-up group (explicit flip transform), labels drawn
/// upright. Identical input and options give identical bytes. With
/// opts.strict the drawing must pass validate_upright_quad
/// (std::invalid_argument otherwise); with strict off, any problems are
/// written to *report when given and rendering proceeds.
std::string render_svg(const GridDrawing& d, const LearningGraph& g,
                       const SvgOptions& opts = {}, ValidationReport* report = nullptr);

}  // namespace uqdraw

#endif
