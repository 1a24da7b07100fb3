#include "treelasso/tree_ops.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <random>

#include "detail/rooted.hpp"
#include "treelasso/errors.hpp"

namespace treelasso {
namespace {

// Leaf set on the side of `e` that does not contain taxon 0.
detail::LeafSet normalized_side(const detail::RootedView& view, XTree::EdgeId e) {
  return view.below(view.lower_endpoint(e));
}

std::map<detail::LeafSet, double> weighted_splits(const XTree& tree) {
  detail::RootedView view(tree);
  std::map<detail::LeafSet, double> out;
  for (XTree::EdgeId e = 0; e < tree.edge_count(); ++e) {
    out.emplace(normalized_side(view, e), tree.edge(e).weight);
  }
  return out;
}

void require_same_taxa(const XTree& lhs, const XTree& rhs) {
  if (lhs.taxa() != rhs.taxa()) throw InputError("trees have different leaf sets");
}

}  // namespace

double path_distance(const XTree& tree, std::string_view x, std::string_view y) {
  const auto from = tree.taxon_index(x);
  const auto to = tree.taxon_index(y);
  double total = 0.0;
  for (auto e : detail::edge_path(tree, from, to)) total += tree.edge(e).weight;
  return total;
}

Split edge_split(const XTree& tree, XTree::EdgeId edge) {
  if (edge >= tree.edge_count()) throw InputError("edge id out of range");
  detail::RootedView view(tree);
  auto lower = normalized_side(view, edge);
  auto upper = lower;
  upper.flip();
  return {detail::to_taxa(tree, upper), detail::to_taxa(tree, lower)};
}

std::set<Split> splits(const XTree& tree) {
  detail::RootedView view(tree);
  std::set<Split> out;
  for (XTree::EdgeId e = 0; e < tree.edge_count(); ++e) {
    auto lower = normalized_side(view, e);
    auto upper = lower;
    upper.flip();
    out.insert({detail::to_taxa(tree, upper), detail::to_taxa(tree, lower)});
  }
  return out;
}

std::set<TaxonSet> clusters(const XTree& tree) {
  std::set<TaxonSet> out;
  for (const auto& s : splits(tree)) {
    out.insert(s.side_a);
    out.insert(s.side_b);
  }
  return out;
}

XTree restrict_to(const XTree& tree, const TaxonSet& taxa) {
  if (taxa.size() < 2) throw InputError("restriction needs at least two taxa");
  detail::LeafSet keep = detail::to_leaves(tree, taxa);

  // Hang the tree from a kept leaf; a vertex stays iff a kept leaf lies below it.
  const XTree::Vertex root = keep.find_first();
  std::vector<XTree::Vertex> parent(tree.vertex_count(), root);
  std::vector<XTree::EdgeId> via(tree.vertex_count(), 0);
  std::vector<XTree::Vertex> order{root};
  std::vector<bool> seen(tree.vertex_count(), false);
  seen[root] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& inc : tree.neighbors(order[i])) {
      if (seen[inc.to]) continue;
      seen[inc.to] = true;
      parent[inc.to] = order[i];
      via[inc.to] = inc.edge;
      order.push_back(inc.to);
    }
  }
  std::vector<bool> needed(tree.vertex_count(), false);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    XTree::Vertex v = *it;
    if (tree.is_leaf(v) && keep.test(v)) needed[v] = true;
    if (needed[v] && v != root) needed[parent[v]] = true;
  }

  TreeBuilder builder;
  std::vector<TreeBuilder::Handle> handle(tree.vertex_count());
  for (XTree::Vertex v : order) {
    if (!needed[v]) continue;
    handle[v] = tree.is_leaf(v) ? builder.add_leaf(tree.label(v)) : builder.add_vertex();
    if (v != root) builder.add_edge(handle[parent[v]], handle[v], tree.edge(via[v]).weight);
  }
  return builder.build();
}

Quartet quartet_topology(const XTree& tree, std::string_view a, std::string_view b,
                         std::string_view c, std::string_view d) {
  const std::array<std::size_t, 4> ids{tree.taxon_index(a), tree.taxon_index(b),
                                       tree.taxon_index(c), tree.taxon_index(d)};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (ids[i] == ids[j]) throw InputError("quartet taxa must be distinct");
    }
  }
  auto hops = [&](std::size_t i, std::size_t j) {
    return detail::edge_path(tree, ids[i], ids[j]).size();
  };
  const std::size_t ab_cd = hops(0, 1) + hops(2, 3);
  const std::size_t ac_bd = hops(0, 2) + hops(1, 3);
  const std::size_t ad_bc = hops(0, 3) + hops(1, 2);
  if (ab_cd < ac_bd && ab_cd < ad_bc) return Quartet::ab_cd;
  if (ac_bd < ab_cd && ac_bd < ad_bc) return Quartet::ac_bd;
  if (ad_bc < ab_cd && ad_bc < ac_bd) return Quartet::ad_bc;
  return Quartet::star;
}

std::vector<std::pair<Taxon, Taxon>> cherries(const XTree& tree) {
  std::vector<std::pair<Taxon, Taxon>> out;
  for (XTree::Vertex v = tree.leaf_count(); v < tree.vertex_count(); ++v) {
    std::vector<XTree::Vertex> leaves;
    for (const auto& inc : tree.neighbors(v)) {
      if (tree.is_leaf(inc.to)) leaves.push_back(inc.to);
    }
    std::sort(leaves.begin(), leaves.end());
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      for (std::size_t j = i + 1; j < leaves.size(); ++j) {
        out.emplace_back(tree.label(leaves[i]), tree.label(leaves[j]));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_equivalent(const XTree& lhs, const XTree& rhs) {
  require_same_taxa(lhs, rhs);
  if (lhs.edge_count() != rhs.edge_count()) return false;
  auto left = weighted_splits(lhs);
  auto right = weighted_splits(rhs);
  if (left.size() != right.size()) return false;
  return std::equal(left.begin(), left.end(), right.begin(),
                    [](const auto& x, const auto& y) { return x.first == y.first; });
}

double max_weight_difference(const XTree& lhs, const XTree& rhs) {
  if (!is_equivalent(lhs, rhs)) throw InputError("trees are not equivalent");
  auto left = weighted_splits(lhs);
  auto right = weighted_splits(rhs);
  double worst = 0.0;
  for (const auto& [split, weight] : left) {
    worst = std::max(worst, std::abs(weight - right.at(split)));
  }
  return worst;
}

std::vector<Taxon> random_tree_taxa(std::size_t n) {
  const std::size_t width = std::to_string(n).size();
  std::vector<Taxon> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    std::string digits = std::to_string(i);
    out.push_back("t" + std::string(width - digits.size(), '0') + digits);
  }
  return out;
}

XTree random_tree(std::size_t n, std::uint64_t seed, double lo, double hi) {
  if (n < 3) throw InputError("random_tree needs n >= 3");
  if (!(lo > 0.0) || !(hi >= lo)) throw InputError("weight range must satisfy 0 < lo <= hi");

  std::mt19937_64 rng(seed);
  // Vertices 0..n-1 are leaves, n.. interior.
  std::vector<std::pair<std::size_t, std::size_t>> edges{{0, n}, {1, n}, {2, n}};
  std::size_t next_interior = n + 1;
  for (std::size_t leaf = 3; leaf < n; ++leaf) {
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    const std::size_t chosen = pick(rng);
    auto [u, v] = edges[chosen];
    const std::size_t mid = next_interior++;
    edges[chosen] = {u, mid};
    edges.emplace_back(mid, v);
    edges.emplace_back(mid, leaf);
  }

  std::uniform_real_distribution<double> weight(lo, hi);
  const auto taxa = random_tree_taxa(n);
  TreeBuilder builder;
  std::vector<TreeBuilder::Handle> handle(next_interior);
  for (std::size_t i = 0; i < n; ++i) handle[i] = builder.add_leaf(taxa[i]);
  for (std::size_t i = n; i < next_interior; ++i) handle[i] = builder.add_vertex();
  for (auto [u, v] : edges) {
    builder.add_edge(handle[u], handle[v], lo == hi ? lo : weight(rng));
  }
  return builder.build();
}

}  // namespace treelasso
