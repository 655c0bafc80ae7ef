#ifndef UQDRAW_REPORT_HPP
#define UQDRAW_REPORT_HPP

#include <string>
#include <vector>

#include "uqdraw/set_family.hpp"

namespace uqdraw {

/// Checkable properties, both of set families and of drawings.
enum class Axiom {
  L1,         // accessibility: every nonempty state loses one element
  L2,         // no interference: joint extension of two single extensions
  Union,      // closure under pairwise union
  WellGraded, // single-step paths of length |symmetric difference|
  AccessExt,  // extension transfer from a subset to a superset
  U1,         // planar straight-line drawing
  U2,         // unique local minimum and maximum
  U3,         // interior faces are upright quadrilaterals
  Dominance,  // coordinatewise dominance == reachability
};

const char* axiom_name(Axiom a);

struct Violation {
  Axiom axiom;
  std::vector<StateSet> witness;
  std::string detail;
};

class ValidationReport {
 public:
  bool ok() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }

  void add(Axiom a, std::vector<StateSet> witness, std::string detail);
  /// One line per violation, "ok" when clean.
  std::string summary(const Universe& u) const;

 private:
  std::vector<Violation> violations_;
};

}  // namespace uqdraw

#endif
