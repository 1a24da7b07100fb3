#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace treelasso {

/// A taxon label: one or more of [A-Za-z0-9_.-], optionally followed by
/// prime marks (a, a', a'').
using Taxon = std::string;
using TaxonSet = std::set<Taxon>;

bool is_valid_taxon(std::string_view label);

/// Unrooted tree whose leaves carry the taxa and which has no vertex of
/// degree 2. Values are immutable once built.
///
/// Vertex numbering is canonical: leaf vertices are 0..n-1 in lexicographic
/// taxon order, so a leaf vertex id doubles as the taxon's index. Interior
/// vertices follow.
class XTree {
 public:
  using Vertex = std::size_t;
  using EdgeId = std::size_t;

  struct Edge {
    Vertex u;
    Vertex v;
    double weight;
  };
  struct Incidence {
    Vertex to;
    EdgeId edge;
  };

  std::size_t leaf_count() const noexcept { return taxa_.size(); }
  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Leaf labels in lexicographic order; position == leaf vertex id.
  const std::vector<Taxon>& taxa() const noexcept { return taxa_; }
  TaxonSet taxon_set() const { return {taxa_.begin(), taxa_.end()}; }
  std::optional<std::size_t> find_taxon(std::string_view label) const;
  /// Throws InputError for an unknown label.
  std::size_t taxon_index(std::string_view label) const;

  bool is_leaf(Vertex v) const noexcept { return v < taxa_.size(); }
  const Taxon& label(Vertex leaf) const { return taxa_.at(leaf); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Incidence> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool is_pendant(EdgeId e) const {
    return is_leaf(edges_[e].u) || is_leaf(edges_[e].v);
  }

  /// Every interior vertex has degree 3.
  bool fully_resolved() const;
  /// Every interior edge carries a strictly positive weight.
  bool has_proper_weights() const;

  /// Same topology, new weights (indexed by EdgeId). Weights must be >= 0.
  XTree with_weights(std::span<const double> weights) const;

 private:
  friend class TreeBuilder;
  XTree() = default;

  std::vector<Taxon> taxa_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// Incremental construction of an XTree from arbitrary vertex ids.
/// build() suppresses unlabeled degree-2 vertices (summing the two weights),
/// checks the X-tree invariants and renumbers vertices canonically.
class TreeBuilder {
 public:
  using Handle = std::size_t;

  Handle add_leaf(Taxon label);
  Handle add_vertex();
  void add_edge(Handle a, Handle b, double weight = 1.0);

  std::size_t size() const noexcept { return labels_.size(); }

  /// Throws InputError when the graph is not a tree, a label is invalid or
  /// repeated, a degree-1 vertex is unlabeled, a labeled vertex is not a leaf,
  /// a weight is negative, or fewer than two leaves remain.
  XTree build() const;

 private:
  struct PendingEdge {
    Handle a;
    Handle b;
    double weight;
  };
  std::vector<std::optional<Taxon>> labels_;
  std::vector<PendingEdge> edges_;
};

}  // namespace treelasso
