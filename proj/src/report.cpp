#include "uqdraw/report.hpp"

namespace uqdraw {

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::L1: return "L1";
    case Axiom::L2: return "L2";
    case Axiom::Union: return "UNION";
    case Axiom::WellGraded: return "WG";
    case Axiom::AccessExt: return "ACCESS-EXT";
    case Axiom::U1: return "U1";
    case Axiom::U2: return "U2";
    case Axiom::U3: return "U3";
    case Axiom::Dominance: return "DOM";
  }
  return "?";
}

void ValidationReport::add(Axiom a, std::vector<StateSet> witness,
                           std::string detail) {
  violations_.push_back({a, std::move(witness), std::move(detail)});
}

std::string ValidationReport::summary(const Universe& u) const {
  if (ok()) return "ok\n";
  std::string out;
  for (const Violation& v : violations_) {
    out += "violation: ";
    out += axiom_name(v.axiom);
    for (StateSet s : v.witness) {
      out += " ";
      out += to_string(s, u);
    }
    if (!v.detail.empty()) {
      out += " -- ";
      out += v.detail;
    }
    out += "\n";
  }
  return out;
}

}  // namespace uqdraw
