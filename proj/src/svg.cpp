#include "uqdraw/svg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "uqdraw/drawing_checks.hpp"

namespace uqdraw {

namespace {

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

// Exact decimal for a value given in half-units.
std::string halves(long long twice) {
  std::string out = std::to_string(twice / 2);
  if (twice % 2 != 0) out += ".5";
  return out;
}

}  // namespace

std::string render_svg(const GridDrawing& d, const LearningGraph& g,
                       const SvgOptions& opts, ValidationReport* report) {
  if (opts.unit < 1) throw std::invalid_argument("unit must be positive");
  ValidationReport checked = validate_upright_quad(d, g);
  if (!checked.ok() && opts.strict) {
    throw std::invalid_argument("refusing to render an invalid drawing:\n" +
                                checked.summary(g.universe()));
  }
  if (report != nullptr) *report = std::move(checked);

  const int u = opts.unit;
  const int margin = u / 2 + 12;
  const int width = d.max_x() * u + 2 * margin;
  const int height = d.max_y() * u + 2 * margin;
  const int radius = std::max(3, u / 10);
  const int font = std::max(8, u / 4);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  // Geometry lives in grid coordinates with the y axis pointing up.
  svg << "<g transform=\"translate(" << margin << "," << height - margin
      << ") scale(1,-1)\">\n";
  svg << "<g stroke=\"#445566\" stroke-width=\"2\" fill=\"none\">\n";
  for (const LabeledEdge& e : g.edges()) {
    svg << "<line x1=\"" << d.at(e.from).x * u << "\" y1=\"" << d.at(e.from).y * u
        << "\" x2=\"" << d.at(e.to).x * u << "\" y2=\"" << d.at(e.to).y * u << "\"/>\n";
  }
  svg << "</g>\n";
  svg << "<g fill=\"#1f6feb\" stroke=\"#0b3d91\" stroke-width=\"1\">\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    svg << "<circle cx=\"" << d.at(v).x * u << "\" cy=\"" << d.at(v).y * u << "\" r=\""
        << radius << "\"/>\n";
  }
  svg << "</g>\n";
  svg << "</g>\n";

  if (opts.labels) {
    // Text is emitted outside the flipped group so it reads upright.
    auto sx = [&](long long twice_grid_x) { return halves(twice_grid_x * u + 2LL * margin); };
    auto sy = [&](long long twice_grid_y) {
      return halves(2LL * height - 2LL * margin - twice_grid_y * u);
    };
    svg << "<g font-family=\"monospace\" font-size=\"" << font << "\" fill=\"#111111\">\n";
    for (const LabeledEdge& e : g.edges()) {
      const long long mx = d.at(e.from).x + d.at(e.to).x;  // in half-units
      const long long my = d.at(e.from).y + d.at(e.to).y;
      svg << "<text x=\"" << sx(mx) << "\" y=\"" << sy(my) << "\" dx=\"4\" dy=\"-4\">"
          << xml_escape(g.universe().name(e.label)) << "</text>\n";
    }
    svg << "</g>\n";
    svg << "<g font-family=\"monospace\" font-size=\"" << font << "\" fill=\"#555555\">\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
      svg << "<text x=\"" << sx(2LL * d.at(v).x) << "\" y=\"" << sy(2LL * d.at(v).y)
          << "\" dx=\"" << radius + 3 << "\" dy=\"" << radius + font << "\">"
          << xml_escape(to_string(g.vertex(v), g.universe())) << "</text>\n";
    }
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace uqdraw
