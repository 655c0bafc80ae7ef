// Command-line front end: validates learning-space families, recognizes
// st-planar ones, produces and checks upright-quad grid drawings, and
// converts between drawings and quadrant arrangements.
//
// Exit codes: 0 success, 1 parse/usage/I-O error, 2 semantic negative
// (invalid family, not st-planar, invalid drawing, roundtrip mismatch).
// Semantic negatives print a machine-readable reason as the first stdout
// line; all output is byte-deterministic.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "uqdraw/drawing.hpp"
#include "uqdraw/drawing_checks.hpp"
#include "uqdraw/family_checks.hpp"
#include "uqdraw/io.hpp"
#include "uqdraw/learning_graph.hpp"
#include "uqdraw/recognize.hpp"
#include "uqdraw/svg.hpp"
#include "uqdraw/zones.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    uqdraw::write_text_file(out_path, text);
  }
}

// All four family checks, concatenated.
uqdraw::ValidationReport full_family_report(const uqdraw::SetFamily& family) {
  uqdraw::ValidationReport merged = uqdraw::validate_family(family);
  for (const uqdraw::ValidationReport& extra :
       {uqdraw::check_union_closed(family), uqdraw::check_well_graded(family),
        uqdraw::verify_accessibility_extension(family)}) {
    for (const auto& v : extra.violations()) {
      merged.add(v.axiom, v.witness, v.detail);
    }
  }
  return merged;
}

int reject_invalid_family(const uqdraw::SetFamily& family) {
  const uqdraw::ValidationReport report = uqdraw::validate_family(family);
  if (report.ok()) return -1;
  std::cout << "invalid-family\n" << report.summary(family.universe());
  return kExitNegative;
}

int cmd_validate(const std::string& path) {
  const uqdraw::SetFamily family = uqdraw::read_family_file(path);
  const uqdraw::ValidationReport report = full_family_report(family);
  if (report.ok()) {
    std::cout << "ok\n";
    return kExitOk;
  }
  std::cout << "invalid-family\n" << report.summary(family.universe());
  return kExitNegative;
}

int cmd_graph(const std::string& path, const std::string& out) {
  const uqdraw::SetFamily family = uqdraw::read_family_file(path);
  if (int rc = reject_invalid_family(family); rc >= 0) return rc;
  emit(uqdraw::write_graph(uqdraw::build_graph(family)), out);
  return kExitOk;
}

std::optional<uqdraw::BoundaryOrders> run_recognizer(const uqdraw::SetFamily& family,
                                                     bool oracle) {
  return oracle ? uqdraw::brute_force_recognize(family) : uqdraw::recognize(family);
}

void print_orders(const uqdraw::Universe& u, const uqdraw::BoundaryOrders& orders) {
  std::cout << "st-planar\n";
  std::cout << "x-order:";
  for (int e : orders.x_order) std::cout << " " << u.name(e);
  std::cout << "\ny-order:";
  for (int e : orders.y_order) std::cout << " " << u.name(e);
  std::cout << "\n";
}

int cmd_recognize(const std::string& path, bool oracle) {
  const uqdraw::SetFamily family = uqdraw::read_family_file(path);
  if (int rc = reject_invalid_family(family); rc >= 0) return rc;
  const auto orders = run_recognizer(family, oracle);
  if (!orders) {
    std::cout << "not-st-planar\n";
    return kExitNegative;
  }
  print_orders(family.universe(), *orders);
  return kExitOk;
}

int cmd_draw(const std::string& path, const std::string& out, const std::string& svg_out,
             bool do_compact, bool labels, int unit, bool oracle) {
  const uqdraw::SetFamily family = uqdraw::read_family_file(path);
  if (int rc = reject_invalid_family(family); rc >= 0) return rc;
  const auto orders = run_recognizer(family, oracle);
  if (!orders) {
    std::cout << "not-st-planar\n";
    return kExitNegative;
  }
  const uqdraw::LearningGraph graph = uqdraw::build_graph(family);
  uqdraw::GridDrawing drawing = uqdraw::assign_coordinates(family, *orders);
  if (do_compact) drawing = uqdraw::compact(drawing, graph);

  if (!svg_out.empty()) {
    uqdraw::SvgOptions opts;
    opts.labels = labels;
    opts.unit = unit;
    uqdraw::write_text_file(svg_out, uqdraw::render_svg(drawing, graph, opts));
  }
  if (!out.empty() || svg_out.empty()) {
    emit(uqdraw::write_drawing(drawing, graph), out);
  }
  return kExitOk;
}

int cmd_regions(const std::string& path, const std::string& out) {
  const uqdraw::QuadrantArrangement arr = uqdraw::read_arrangement_file(path);
  emit(uqdraw::write_family(uqdraw::region_family(arr)), out);
  return kExitOk;
}

int cmd_zones(const std::string& path) {
  const uqdraw::DrawingFile df = uqdraw::read_drawing_file(path);
  const auto report = uqdraw::validate_upright_quad(df.drawing, df.graph);
  if (!report.ok()) {
    std::cout << "invalid-drawing\n" << report.summary(df.graph.universe());
    return kExitNegative;
  }
  const auto zones = uqdraw::extract_zones(df.drawing, df.graph);
  std::cout << "zones v1\ncount " << zones.size() << "\n";
  for (size_t i = 0; i < zones.size(); ++i) {
    const uqdraw::Zone& z = zones[i];
    std::cout << "zone " << i << " label " << df.graph.universe().name(z.label)
              << " faces " << z.faces.size() << " edges";
    for (int e : z.edges) std::cout << " " << e;
    if (z.bridge) std::cout << " bridge";
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_to_arrangement(const std::string& path, const std::string& out) {
  const uqdraw::DrawingFile df = uqdraw::read_drawing_file(path);
  const auto report = uqdraw::validate_upright_quad(df.drawing, df.graph);
  if (!report.ok()) {
    std::cout << "invalid-drawing\n" << report.summary(df.graph.universe());
    return kExitNegative;
  }
  emit(uqdraw::write_arrangement(uqdraw::drawing_to_arrangement(df.drawing, df.graph)), out);
  return kExitOk;
}

int cmd_roundtrip(const std::string& path) {
  const uqdraw::DrawingFile df = uqdraw::read_drawing_file(path);
  const auto report = uqdraw::validate_upright_quad(df.drawing, df.graph);
  if (!report.ok()) {
    std::cout << "invalid-drawing\n" << report.summary(df.graph.universe());
    return kExitNegative;
  }
  const uqdraw::QuadrantArrangement arr = uqdraw::drawing_to_arrangement(df.drawing, df.graph);
  const uqdraw::LearningGraph back = uqdraw::region_graph(arr);
  if (back == df.graph) {
    std::cout << "roundtrip: ok\n";
    return kExitOk;
  }
  std::cout << "roundtrip-mismatch\n";
  return kExitNegative;
}

int cmd_census(int n) {
  std::cout << uqdraw::census(n).table();
  return kExitOk;
}

int cmd_render(const std::string& path, const std::string& svg_out, bool labels, int unit) {
  const uqdraw::DrawingFile df = uqdraw::read_drawing_file(path);
  uqdraw::SvgOptions opts;
  opts.labels = labels;
  opts.unit = unit;
  opts.strict = false;
  uqdraw::ValidationReport report;
  const std::string svg = uqdraw::render_svg(df.drawing, df.graph, opts, &report);
  if (!report.ok()) {
    std::cout << "invalid-drawing\n" << report.summary(df.graph.universe());
    return kExitNegative;
  }
  emit(svg, svg_out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"learning-space validation, st-planar recognition and upright-quad drawing"};
  app.require_subcommand(1);

  std::string in_path, out_path, svg_path;
  bool flag_compact = false, flag_labels = false, flag_oracle = false;
  int unit = 48;
  int census_n = 0;

  auto* validate = app.add_subcommand("validate", "check the learning-space axioms");
  validate->add_option("family", in_path, "family file")->required();

  auto* graph = app.add_subcommand("graph", "emit the learning graph of a family");
  graph->add_option("family", in_path, "family file")->required();
  graph->add_option("-o,--output", out_path, "output path (default stdout)");

  auto* recognize = app.add_subcommand("recognize", "recover boundary orders if st-planar");
  recognize->add_option("family", in_path, "family file")->required();
  recognize->add_flag("--oracle", flag_oracle, "use the brute-force recognizer");

  auto* draw = app.add_subcommand("draw", "produce an upright-quad grid drawing");
  draw->add_option("family", in_path, "family file")->required();
  draw->add_option("-o,--output", out_path, "drawing file path (default stdout)");
  draw->add_option("--svg", svg_path, "also write an SVG rendering");
  draw->add_flag("--compact", flag_compact, "compact coordinates after placement");
  draw->add_flag("--labels", flag_labels, "label edges and vertices in the SVG");
  draw->add_option("--unit", unit, "SVG pixels per grid step")->check(CLI::PositiveNumber);
  draw->add_flag("--oracle", flag_oracle, "use the brute-force recognizer");

  auto* regions = app.add_subcommand("regions", "region family of a quadrant arrangement");
  regions->add_option("arrangement", in_path, "arrangement file")->required();
  regions->add_option("-o,--output", out_path, "output path (default stdout)");

  auto* zones = app.add_subcommand("zones", "list the zones of a drawing");
  zones->add_option("drawing", in_path, "drawing file")->required();

  auto* toarr = app.add_subcommand("to-arrangement", "canonical arrangement of a drawing");
  toarr->add_option("drawing", in_path, "drawing file")->required();
  toarr->add_option("-o,--output", out_path, "output path (default stdout)");

  auto* roundtrip = app.add_subcommand("roundtrip", "verify drawing->arrangement->graph");
  roundtrip->add_option("drawing", in_path, "drawing file")->required();

  auto* census = app.add_subcommand("census", "census of region families over n elements");
  census->add_option("--n", census_n, "universe size")->required()->check(CLI::Range(0, 6));

  auto* render = app.add_subcommand("render", "render a drawing file as SVG");
  render->add_option("drawing", in_path, "drawing file")->required();
  render->add_option("--svg", svg_path, "output path (default stdout)");
  render->add_flag("--labels", flag_labels, "label edges and vertices");
  render->add_option("--unit", unit, "pixels per grid step")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitError;
  }

  try {
    if (validate->parsed()) return cmd_validate(in_path);
    if (graph->parsed()) return cmd_graph(in_path, out_path);
    if (recognize->parsed()) return cmd_recognize(in_path, flag_oracle);
    if (draw->parsed())
      return cmd_draw(in_path, out_path, svg_path, flag_compact, flag_labels, unit,
                      flag_oracle);
    if (regions->parsed()) return cmd_regions(in_path, out_path);
    if (zones->parsed()) return cmd_zones(in_path);
    if (toarr->parsed()) return cmd_to_arrangement(in_path, out_path);
    if (roundtrip->parsed()) return cmd_roundtrip(in_path);
    if (census->parsed()) return cmd_census(census_n);
    if (render->parsed()) return cmd_render(in_path, svg_path, flag_labels, unit);
  } catch (const uqdraw::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
