#pragma once

#include <optional>
#include <vector>

#include "treelasso/cords.hpp"
#include "treelasso/xtree.hpp"

namespace treelasso {

struct TwoDTreeOptions {
  /// Eliminate the first vertex of degree 2 without backtracking.
  bool greedy_only = false;
};

/// Looks for an ordering x1..xn of `taxa` with x1x2 a cord and every later
/// vertex joined to exactly two earlier ones. Works backwards, deleting a
/// vertex of degree 2 at a time; dead ends are memoised by remaining vertex
/// set. A graph whose edge count differs from 2n-3 is rejected immediately.
std::optional<std::vector<Taxon>> is_2dtree(const CordSet& cords, const TaxonSet& taxa,
                                            const TwoDTreeOptions& options = {});

/// Checks an explicit ordering (which also fixes the taxon set).
bool is_2dtree_ordering(const CordSet& cords, const std::vector<Taxon>& ordering);

/// Builds a fully resolved tree from a 2d-tree ordering: start with the edge
/// x1-x2 and hang each later xi from a new vertex subdividing the path
/// between its two earlier neighbours xj, xk (j < k). The subdivided edge is
/// the one whose midpoint lies nearest the midpoint of the path, ties going
/// to the xj side. All edges have weight 1.
///
/// Throws InputError when the ordering is not a 2d-tree ordering of the cords.
XTree tree_from_2dtree(const CordSet& cords, const std::vector<Taxon>& ordering);

}  // namespace treelasso
