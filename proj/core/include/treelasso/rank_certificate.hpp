#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "treelasso/cords.hpp"
#include "treelasso/xtree.hpp"

namespace treelasso {

/// 0/1 matrix with one row per cord (in set order) and one column per edge
/// id: entry 1 iff the edge lies on the path between the cord's leaves.
std::vector<std::vector<std::uint8_t>> path_incidence_matrix(const XTree& tree,
                                                             const CordSet& cords);

/// Exact rank by fraction-free (Bareiss) elimination over arbitrary
/// precision integers.
std::size_t exact_rank(const std::vector<std::vector<std::uint8_t>>& matrix);

/// True iff the distances on the cords fix every edge weight, that is the
/// path incidence matrix has rank equal to the number of edges.
bool edge_weight_lasso_certificate(const XTree& tree, const CordSet& cords);

}  // namespace treelasso
