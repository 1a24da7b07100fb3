#pragma once

#include <cstddef>
#include <optional>

#include "treelasso/cords.hpp"
#include "treelasso/tolerance.hpp"
#include "treelasso/xtree.hpp"

namespace treelasso {

/// Largest leaf count the oracle accepts; 9 leaves means 135135 topologies.
inline constexpr std::size_t kOracleMaxLeaves = 9;

struct TopologicalVerdict {
  /// Some X-tree not equivalent to the input tree, with a proper weighting,
  /// reproduces the distances on every cord.
  bool refuted = false;
  /// The refuting tree with its weights, when refuted.
  std::optional<XTree> alternative;
  std::size_t topologies_checked = 0;

  bool generically_topological() const noexcept { return !refuted; }
};

/// Tests whether the cords pin down the topology of `tree` for its current
/// (proper) weights. Every fully resolved topology on the same taxa is tried:
/// a non-negative weighting matching the tree distances on the cords is
/// sought by linear programming, and zero interior edges of a solution are
/// contracted. Any solution whose contracted tree differs from `tree`
/// refutes, including contractions of `tree` itself. A pass only speaks for
/// this weighting, hence "generically".
///
/// Throws InputError when the tree has more than kOracleMaxLeaves leaves, is
/// not fully resolved, or its weights are not proper.
TopologicalVerdict topological_lasso_oracle(const XTree& tree, const CordSet& cords,
                                            const Tolerance& tolerance = {});

}  // namespace treelasso
