#pragma once

#include <cstdint>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "treelasso/xtree.hpp"

namespace treelasso {

/// Bipartition of the taxa induced by deleting one edge. side_a holds the
/// lexicographically smallest taxon.
struct Split {
  TaxonSet side_a;
  TaxonSet side_b;

  friend auto operator<=>(const Split&, const Split&) = default;
};

/// Weighted length of the path between two leaves.
double path_distance(const XTree& tree, std::string_view x, std::string_view y);

/// Split induced by one edge.
Split edge_split(const XTree& tree, XTree::EdgeId edge);
/// All splits, one per edge.
std::set<Split> splits(const XTree& tree);

/// Both sides of every split, deduplicated.
std::set<TaxonSet> clusters(const XTree& tree);

/// The tree spanned by `taxa`, with degree-2 vertices suppressed and their
/// weights merged. Needs at least two taxa.
XTree restrict_to(const XTree& tree, const TaxonSet& taxa);

/// Resolution of the quartet {a,b,c,d}, named relative to the argument order.
enum class Quartet { ab_cd, ac_bd, ad_bc, star };

Quartet quartet_topology(const XTree& tree, std::string_view a, std::string_view b,
                         std::string_view c, std::string_view d);

/// Leaf pairs with a common neighbour, each pair ordered, list sorted.
std::vector<std::pair<Taxon, Taxon>> cherries(const XTree& tree);

/// Same leaf set and same split set; weights ignored. Throws InputError when
/// the leaf sets differ.
bool is_equivalent(const XTree& lhs, const XTree& rhs);

/// Largest absolute weight difference over matched splits. Throws InputError
/// unless the trees are equivalent.
double max_weight_difference(const XTree& lhs, const XTree& rhs);

/// Uniformly random fully resolved topology by sequential attachment to a
/// random edge, weights i.i.d. uniform on [lo, hi]. Taxa are t1..tn,
/// zero-padded so that lexicographic and numeric order agree.
XTree random_tree(std::size_t n, std::uint64_t seed, double lo, double hi);

/// Taxon names used by random_tree for n leaves.
std::vector<Taxon> random_tree_taxa(std::size_t n);

}  // namespace treelasso
