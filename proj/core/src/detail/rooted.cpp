#include "detail/rooted.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace treelasso::detail {

RootedView::RootedView(const XTree& tree)
    : tree_(&tree),
      parent_(tree.vertex_count(), std::numeric_limits<XTree::Vertex>::max()),
      parent_edge_(tree.vertex_count(), std::numeric_limits<XTree::EdgeId>::max()),
      below_(tree.vertex_count(), LeafSet(tree.leaf_count())) {
  preorder_.reserve(tree.vertex_count());
  std::vector<XTree::Vertex> stack{0};
  std::vector<bool> seen(tree.vertex_count(), false);
  seen[0] = true;
  while (!stack.empty()) {
    XTree::Vertex v = stack.back();
    stack.pop_back();
    preorder_.push_back(v);
    for (const auto& inc : tree.neighbors(v)) {
      if (seen[inc.to]) continue;
      seen[inc.to] = true;
      parent_[inc.to] = v;
      parent_edge_[inc.to] = inc.edge;
      stack.push_back(inc.to);
    }
  }
  for (auto it = preorder_.rbegin(); it != preorder_.rend(); ++it) {
    XTree::Vertex v = *it;
    if (tree.is_leaf(v) && v != 0) below_[v].set(v);
    if (v != 0) below_[parent_[v]] |= below_[v];
  }
  // The root leaf sits above everything; record it for completeness.
  below_[0].set(0);
}

LeafSet RootedView::side(XTree::Vertex from, XTree::Vertex to) const {
  if (to != 0 && parent_[to] == from) return below_[to];
  LeafSet rest = below_[from];
  rest.flip();
  return rest;
}

XTree::Vertex RootedView::lower_endpoint(XTree::EdgeId e) const {
  const auto& edge = tree_->edge(e);
  return (edge.v != 0 && parent_[edge.v] == edge.u) ? edge.v : edge.u;
}

std::vector<std::vector<double>> leaf_distances(const XTree& tree, bool hops) {
  const std::size_t n = tree.leaf_count();
  std::vector<std::vector<double>> out(n, std::vector<double>(n, 0.0));
  std::vector<double> dist(tree.vertex_count());
  std::vector<bool> seen(tree.vertex_count());
  std::vector<XTree::Vertex> stack;
  for (std::size_t source = 0; source < n; ++source) {
    std::fill(seen.begin(), seen.end(), false);
    dist[source] = 0.0;
    seen[source] = true;
    stack.assign(1, source);
    while (!stack.empty()) {
      XTree::Vertex v = stack.back();
      stack.pop_back();
      for (const auto& inc : tree.neighbors(v)) {
        if (seen[inc.to]) continue;
        seen[inc.to] = true;
        dist[inc.to] = dist[v] + (hops ? 1.0 : tree.edge(inc.edge).weight);
        stack.push_back(inc.to);
      }
    }
    for (std::size_t t = 0; t < n; ++t) out[source][t] = dist[t];
  }
  return out;
}

namespace {

// Parent links of a search from `from`, stopped once `to` is reached.
std::vector<XTree::Incidence> search_back_links(const XTree& tree, XTree::Vertex from,
                                                XTree::Vertex to) {
  constexpr auto none = std::numeric_limits<XTree::Vertex>::max();
  std::vector<XTree::Incidence> back(tree.vertex_count(), {none, none});
  std::deque<XTree::Vertex> queue{from};
  back[from] = {from, none};
  while (!queue.empty() && back[to].to == none) {
    XTree::Vertex v = queue.front();
    queue.pop_front();
    for (const auto& inc : tree.neighbors(v)) {
      if (back[inc.to].to != none) continue;
      back[inc.to] = {v, inc.edge};
      queue.push_back(inc.to);
    }
  }
  return back;
}

}  // namespace

std::vector<XTree::Vertex> vertex_path(const XTree& tree, XTree::Vertex from, XTree::Vertex to) {
  auto back = search_back_links(tree, from, to);
  std::vector<XTree::Vertex> path{to};
  for (XTree::Vertex v = to; v != from; v = back[v].to) path.push_back(back[v].to);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<XTree::EdgeId> edge_path(const XTree& tree, XTree::Vertex from, XTree::Vertex to) {
  auto back = search_back_links(tree, from, to);
  std::vector<XTree::EdgeId> path;
  for (XTree::Vertex v = to; v != from; v = back[v].to) path.push_back(back[v].edge);
  std::reverse(path.begin(), path.end());
  return path;
}

TaxonSet to_taxa(const XTree& tree, const LeafSet& leaves) {
  TaxonSet out;
  for (auto i = leaves.find_first(); i != LeafSet::npos; i = leaves.find_next(i)) {
    out.insert(tree.label(i));
  }
  return out;
}

LeafSet to_leaves(const XTree& tree, const TaxonSet& taxa) {
  LeafSet out(tree.leaf_count());
  for (const auto& t : taxa) out.set(tree.taxon_index(t));
  return out;
}

}  // namespace treelasso::detail
