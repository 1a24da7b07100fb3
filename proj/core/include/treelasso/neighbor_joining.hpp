#pragma once

#include "treelasso/cords.hpp"
#include "treelasso/tolerance.hpp"
#include "treelasso/xtree.hpp"

namespace treelasso {

struct NeighborJoiningOptions {
  Tolerance tolerance{};
  /// Largest accepted |tree distance - input distance| once the tree is
  /// built, relative to max(1, distance).
  double verification_tolerance = 1e-6;
};

/// Classical Neighbor-Joining on a distance known for every cord over its
/// taxa. Among pairs whose Q-criterion ties within tolerance the
/// lexicographically first pair is joined. Branch lengths in [-eps, 0) are
/// set to 0.
///
/// Throws InputError when a cord is missing or fewer than two taxa are
/// present, and InconsistencyError when a branch length falls below -eps or
/// the finished tree does not reproduce the input (the input is then not a
/// tree metric).
XTree neighbor_joining(const PartialDistance& distances,
                       const NeighborJoiningOptions& options = {});

}  // namespace treelasso
