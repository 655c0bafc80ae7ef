#ifndef UQDRAW_FAMILY_CHECKS_HPP
#define UQDRAW_FAMILY_CHECKS_HPP

#include <vector>

#include "uqdraw/report.hpp"
#include "uqdraw/set_family.hpp"

namespace uqdraw {

/// Checks the two learning-space axioms. L1: every nonempty state has an
/// element whose removal stays in the family (a missing empty set is
/// reported under L1 as well, since L1 forces it by descent). L2: whenever
/// S, S+x and S+y are all present, so is S+x+y. Every violation is listed.
ValidationReport validate_family(const SetFamily& f);

/// Union of any two member states is a member.
ValidationReport check_union_closed(const SetFamily& f);

/// Any two states are joined by single-element steps inside the family,
/// using exactly |symmetric difference| steps. Checked pairwise by BFS
/// restricted to states between the intersection and the union of the pair.
ValidationReport check_well_graded(const SetFamily& f);

/// For K subset of L (both states) with K+q a state and q outside L,
/// L+q must be a state.
ValidationReport verify_accessibility_extension(const SetFamily& f);

/// A chain from `from` to `to` adding one element per step, every member a
/// state. Requires from subset of to, both present, and a family satisfying
/// the learning-space axioms. Ties broken by smallest element index, so the
/// result is deterministic.
std::vector<StateSet> chain_between(const SetFamily& f, StateSet from, StateSet to);

}  // namespace uqdraw

#endif
