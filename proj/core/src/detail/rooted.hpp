#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <vector>

#include "treelasso/xtree.hpp"

namespace treelasso::detail {

using LeafSet = boost::dynamic_bitset<>;

/// The tree hung from leaf 0: parent links, preorder, and the leaf set below
/// every vertex. Answers "which leaves lie on the far side of this edge".
class RootedView {
 public:
  explicit RootedView(const XTree& tree);

  const XTree& tree() const noexcept { return *tree_; }
  XTree::Vertex parent(XTree::Vertex v) const { return parent_[v]; }
  XTree::EdgeId parent_edge(XTree::Vertex v) const { return parent_edge_[v]; }
  const std::vector<XTree::Vertex>& preorder() const noexcept { return preorder_; }
  const LeafSet& below(XTree::Vertex v) const { return below_[v]; }

  /// Leaves reachable from `to` without passing through `from` (adjacent).
  LeafSet side(XTree::Vertex from, XTree::Vertex to) const;
  /// Child-side endpoint of an edge.
  XTree::Vertex lower_endpoint(XTree::EdgeId e) const;

 private:
  const XTree* tree_;
  std::vector<XTree::Vertex> parent_;
  std::vector<XTree::EdgeId> parent_edge_;
  std::vector<XTree::Vertex> preorder_;
  std::vector<LeafSet> below_;
};

/// Leaf-to-leaf distances by dynamic programming over the tree, indexed by
/// taxon index. With `hops` each edge counts 1 regardless of weight.
std::vector<std::vector<double>> leaf_distances(const XTree& tree, bool hops = false);

/// Vertex sequence of the unique path between two vertices.
std::vector<XTree::Vertex> vertex_path(const XTree& tree, XTree::Vertex from, XTree::Vertex to);
/// Edge ids of the unique path between two vertices.
std::vector<XTree::EdgeId> edge_path(const XTree& tree, XTree::Vertex from, XTree::Vertex to);

TaxonSet to_taxa(const XTree& tree, const LeafSet& leaves);
LeafSet to_leaves(const XTree& tree, const TaxonSet& taxa);

}  // namespace treelasso::detail
