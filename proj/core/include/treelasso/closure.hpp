#pragma once

#include <array>
#include <string>
#include <vector>

#include "treelasso/cords.hpp"
#include "treelasso/tolerance.hpp"

namespace treelasso {

/// One application of the extension rule: `cord` = xz was missing, the other
/// five cords of {x,y,u,z} were known, d(x,y)+d(u,z) < d(x,u)+d(y,z), and
/// d(x,z) was set to d(x,u)+d(y,z)-d(y,u).
struct ClosureStep {
  Cord cord;
  std::array<Taxon, 4> quadruple;  // x, y, u, z
  double value;
};

struct ClosureTrace {
  TaxonSet taxa;
  std::vector<ClosureStep> steps;
  PartialDistance final;

  /// The fixpoint knows every cord over `taxa`.
  bool complete() const;
  CordSet missing() const;
};

struct ClosureOptions {
  Tolerance tolerance{};
  /// Run the rule in exact rational arithmetic. Input doubles are converted
  /// exactly, comparisons need no tolerance, and trace values are rounded
  /// back to double only for reporting.
  bool exact_rational = false;
};

/// Applies the extension rule until nothing changes.
///
/// Missing cords are visited in lexicographic order (x < z) and, for each,
/// the helper pair (y, u) is scanned lexicographically; the first admissible
/// pair fixes the value and the cord becomes available immediately. Every
/// other admissible pair must derive the same value within tolerance,
/// otherwise InconsistencyError is thrown, as it is for a derived distance
/// below zero. In floating mode the strict inequality must hold by more than
/// the tolerance.
ClosureTrace closure(const PartialDistance& distances, const ClosureOptions& options = {});

/// Same, over an explicit taxon set; taxa without any cord stay missing.
ClosureTrace closure(const PartialDistance& distances, const TaxonSet& taxa,
                     const ClosureOptions& options = {});

/// One line per step: "x z := d(x,u)+d(y,z)-d(y,u) via (x,y,u,z) = value"
/// with taxon names substituted.
std::string format_closure_trace(const ClosureTrace& trace);

}  // namespace treelasso
