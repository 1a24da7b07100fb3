#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "treelasso/cords.hpp"
#include "treelasso/tolerance.hpp"
#include "treelasso/xtree.hpp"

namespace treelasso {

/// A choice of one taxon per cluster of a tree.
using Transversal = std::map<TaxonSet, Taxon>;

/// Outcome of the stability check. On failure `outer`/`inner` witness the
/// violated implication f(outer) in inner, inner subset of outer, but
/// f(outer) != f(inner); a transversality failure reports outer == inner.
struct StabilityReport {
  bool stable = true;
  std::optional<TaxonSet> outer;
  std::optional<TaxonSet> inner;
  std::string reason;

  explicit operator bool() const noexcept { return stable; }
};

/// Checks transversality and stability over every pair of clusters. Witnesses
/// are searched with the outer cluster in order of increasing size, so the
/// tightest violation is reported. Throws InputError when f misses a cluster
/// or names a set that is not a cluster.
StabilityReport is_stable(const Transversal& f, const XTree& tree);

/// f(A) = first element of A under `order` (a permutation of the taxa).
Transversal min_order_transversal(const XTree& tree, const std::vector<Taxon>& order);

enum class LeafPreference { closest, furthest };

/// For each cluster A, the leaves of A nearest (or furthest) from the edge
/// that cuts A off, measured with the tree's weights to the endpoint of that
/// edge inside A; ties go to the first such leaf under `tiebreak`. Requires
/// proper weights.
Transversal closest_leaf_transversal(const XTree& tree, LeafPreference preference,
                                     const std::vector<Taxon>& tiebreak,
                                     const Tolerance& tolerance = {});

/// The cords f(A1)f(A2), f(A2)f(A3), f(A3)f(A1) over the three components of
/// every interior vertex. The tree must be fully resolved. Unless `force` is
/// set the transversal must be stable; forced generation still needs
/// transversality on the clusters it reads.
CordSet triplet_cover(const XTree& tree, const Transversal& f, bool force = false);

/// At every interior vertex, some cord joins each pair of the three components.
bool is_cover(const XTree& tree, const CordSet& cords);

/// At every interior vertex, some triangle of cords has one corner in each of
/// the three components.
bool is_triplet_cover(const XTree& tree, const CordSet& cords);

}  // namespace treelasso
