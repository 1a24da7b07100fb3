#pragma once

#include <optional>

#include "treelasso/closure.hpp"
#include "treelasso/cords.hpp"
#include "treelasso/xtree.hpp"

namespace treelasso {

struct ReconstructionOptions {
  ClosureOptions closure{};
  /// Absolute bound on |tree distance - input distance| for every input cord.
  double verification_tolerance = 1e-6;
};

struct Reconstruction {
  /// Present iff the closure reached every cord.
  std::optional<XTree> tree;
  ClosureTrace closure;
  /// Cords the closure could not derive; empty on success.
  CordSet missing;

  bool complete() const noexcept { return tree.has_value(); }
};

/// Closes the distances under the extension rule and, when every cord is
/// known, rebuilds the tree by Neighbor-Joining and checks that it reproduces
/// every input distance. An incomplete closure is reported, not thrown.
///
/// Throws InputError for empty or malformed input and InconsistencyError when
/// the input is found not to be a tree metric.
Reconstruction reconstruct(const PartialDistance& distances,
                           const ReconstructionOptions& options = {});

/// Same over an explicit taxon set, which must contain every taxon of the
/// distances; taxa that appear in no cord leave their cords missing.
Reconstruction reconstruct(const PartialDistance& distances, const TaxonSet& taxa,
                           const ReconstructionOptions& options = {});

}  // namespace treelasso
