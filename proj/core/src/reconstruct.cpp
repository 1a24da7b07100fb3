#include "treelasso/reconstruct.hpp"

#include <cmath>

#include "detail/rooted.hpp"
#include "treelasso/errors.hpp"
#include "treelasso/neighbor_joining.hpp"
#include "treelasso/newick.hpp"

namespace treelasso {

Reconstruction reconstruct(const PartialDistance& distances, const ReconstructionOptions& options) {
  return reconstruct(distances, taxa_of(distances), options);
}

Reconstruction reconstruct(const PartialDistance& distances, const TaxonSet& taxa,
                           const ReconstructionOptions& options) {
  Reconstruction out;
  out.closure = closure(distances, taxa, options.closure);
  if (!out.closure.complete()) {
    out.missing = out.closure.missing();
    return out;
  }

  NeighborJoiningOptions nj;
  nj.tolerance = options.closure.tolerance;
  nj.verification_tolerance = options.verification_tolerance;
  XTree tree = neighbor_joining(out.closure.final, nj);

  const auto actual = detail::leaf_distances(tree);
  for (const auto& [cord, value] : distances) {
    const double got = actual[tree.taxon_index(cord.first())][tree.taxon_index(cord.second())];
    if (std::abs(got - value) > options.verification_tolerance) {
      throw InconsistencyError("reconstructed tree gives " + format_number(got) + " for " +
                               cord.first() + " " + cord.second() + " instead of " +
                               format_number(value));
    }
  }
  out.tree = std::move(tree);
  return out;
}

}  // namespace treelasso
