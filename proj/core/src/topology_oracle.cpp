#include "treelasso/topology_oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "detail/feasibility.hpp"
#include "detail/rooted.hpp"
#include "treelasso/errors.hpp"

namespace treelasso {
namespace {

using Mask = std::uint32_t;

struct Topology {
  std::size_t leaves;
  std::size_t vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency() const {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(vertices);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      adj[edges[e].first].emplace_back(edges[e].second, e);
      adj[edges[e].second].emplace_back(edges[e].first, e);
    }
    return adj;
  }

  // For each edge, the leaves on the side away from leaf 0.
  std::vector<Mask> edge_masks() const {
    const auto adj = adjacency();
    std::vector<Mask> below(vertices, 0);
    std::vector<std::size_t> parent_edge(vertices, edges.size());
    std::vector<std::size_t> order;
    std::vector<std::size_t> stack{0};
    std::vector<bool> seen(vertices, false);
    seen[0] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (auto [w, e] : adj[v]) {
        if (seen[w]) continue;
        seen[w] = true;
        parent_edge[w] = e;
        stack.push_back(w);
      }
    }
    std::vector<Mask> out(edges.size(), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto v = *it;
      if (v < leaves && v != 0) below[v] |= Mask{1} << v;
      if (v == 0) continue;
      const auto e = parent_edge[v];
      out[e] = below[v];
      const auto u = edges[e].first == v ? edges[e].second : edges[e].first;
      below[u] |= below[v];
    }
    return out;
  }

  // Row per cord, column per edge.
  std::vector<std::vector<double>> incidence(
      const std::vector<std::pair<std::size_t, std::size_t>>& cords) const {
    const auto masks = edge_masks();
    std::vector<std::vector<double>> rows;
    rows.reserve(cords.size());
    for (auto [x, y] : cords) {
      std::vector<double> row(edges.size(), 0.0);
      for (std::size_t e = 0; e < edges.size(); ++e) {
        const bool has_x = x != 0 && (masks[e] >> x & 1U);
        const bool has_y = y != 0 && (masks[e] >> y & 1U);
        row[e] = has_x != has_y ? 1.0 : 0.0;
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }
};

std::vector<Mask> sorted_splits(std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end());
  return masks;
}

Topology topology_of(const XTree& tree) {
  Topology out{tree.leaf_count(), tree.vertex_count(), {}};
  for (const auto& e : tree.edges()) out.edges.emplace_back(e.u, e.v);
  return out;
}

XTree contract(const Topology& topo, const std::vector<double>& weights,
               const std::vector<bool>& zero, const std::vector<Taxon>& taxa) {
  std::vector<std::size_t> rep(topo.vertices);
  std::iota(rep.begin(), rep.end(), 0);
  auto find = [&](std::size_t v) {
    while (rep[v] != v) v = rep[v] = rep[rep[v]];
    return v;
  };
  for (std::size_t e = 0; e < topo.edges.size(); ++e) {
    if (!zero[e]) continue;
    auto a = find(topo.edges[e].first);
    auto b = find(topo.edges[e].second);
    rep[std::max(a, b)] = std::min(a, b);
  }
  TreeBuilder builder;
  std::vector<TreeBuilder::Handle> handle(topo.vertices, 0);
  for (std::size_t v = 0; v < topo.leaves; ++v) handle[v] = builder.add_leaf(taxa[v]);
  for (std::size_t v = topo.leaves; v < topo.vertices; ++v) {
    if (find(v) == v) handle[v] = builder.add_vertex();
  }
  for (std::size_t e = 0; e < topo.edges.size(); ++e) {
    if (zero[e]) continue;
    builder.add_edge(handle[find(topo.edges[e].first)], handle[find(topo.edges[e].second)],
                     weights[e]);
  }
  return builder.build();
}

class Search {
 public:
  Search(const XTree& tree, const CordSet& cords, const Tolerance& tolerance)
      : taxa_(tree.taxa()), target_(sorted_splits(topology_of(tree).edge_masks())) {
    double scale = 1.0;
    for (const auto& cord : cords) {
      const auto a = tree.taxon_index(cord.first());
      const auto b = tree.taxon_index(cord.second());
      double d = 0.0;
      for (auto e : detail::edge_path(tree, a, b)) d += tree.edge(e).weight;
      cords_.emplace_back(a, b);
      distances_.push_back(d);
      scale = std::max(scale, d);
    }
    zero_weight_ = tolerance.epsilon * scale;
  }

  TopologicalVerdict run() {
    const std::size_t n = taxa_.size();
    Topology topo{n, n + 1, {{0, n}, {1, n}, {2, n}}};
    grow(topo, 3);
    return std::move(verdict_);
  }

 private:
  void grow(Topology& topo, std::size_t next) {
    if (verdict_.refuted) return;
    if (next == taxa_.size()) {
      examine(topo);
      return;
    }
    const std::size_t edge_count = topo.edges.size();
    for (std::size_t e = 0; e < edge_count && !verdict_.refuted; ++e) {
      const auto [u, v] = topo.edges[e];
      const std::size_t s = topo.vertices++;
      topo.edges[e] = {u, s};
      topo.edges.emplace_back(s, v);
      topo.edges.emplace_back(s, next);
      grow(topo, next + 1);
      topo.edges.resize(edge_count);
      topo.edges[e] = {u, v};
      --topo.vertices;
    }
  }

  void examine(const Topology& topo) {
    ++verdict_.topologies_checked;
    const auto rows = topo.incidence(cords_);
    const bool same = sorted_splits(topo.edge_masks()) == target_;
    if (!same) {
      try_weights(topo, rows, topo.edges.size());
      return;
    }
    // The input topology itself refutes only with some interior edge at 0.
    for (std::size_t e = 0; e < topo.edges.size() && !verdict_.refuted; ++e) {
      if (topo.edges[e].first < topo.leaves || topo.edges[e].second < topo.leaves) continue;
      try_weights(topo, rows, e);
    }
  }

  // Looks for w >= 0 reproducing the distances, with edge `fixed` held at 0
  // (no edge is held when fixed == edge count).
  void try_weights(const Topology& topo, const std::vector<std::vector<double>>& rows,
                   std::size_t fixed) {
    std::vector<std::vector<double>> a;
    a.reserve(rows.size());
    for (const auto& row : rows) {
      std::vector<double> r;
      for (std::size_t e = 0; e < row.size(); ++e) {
        if (e != fixed) r.push_back(row[e]);
      }
      a.push_back(std::move(r));
    }
    auto solution = detail::nonnegative_solution(a, distances_);
    if (!solution) return;

    std::vector<double> weights(topo.edges.size(), 0.0);
    for (std::size_t e = 0, j = 0; e < topo.edges.size(); ++e) {
      if (e != fixed) weights[e] = (*solution)[j++];
    }
    std::vector<bool> zero(topo.edges.size(), false);
    for (std::size_t e = 0; e < topo.edges.size(); ++e) {
      const bool interior = topo.edges[e].first >= topo.leaves && topo.edges[e].second >= topo.leaves;
      if (weights[e] <= zero_weight_) {
        weights[e] = 0.0;
        zero[e] = interior;
      }
    }
    XTree alternative = contract(topo, weights, zero, taxa_);
    verdict_.refuted = true;
    verdict_.alternative = std::move(alternative);
  }

  std::vector<Taxon> taxa_;
  std::vector<Mask> target_;
  std::vector<std::pair<std::size_t, std::size_t>> cords_;
  std::vector<double> distances_;
  double zero_weight_ = 0.0;
  TopologicalVerdict verdict_;
};

}  // namespace

TopologicalVerdict topological_lasso_oracle(const XTree& tree, const CordSet& cords,
                                            const Tolerance& tolerance) {
  if (tree.leaf_count() > kOracleMaxLeaves) {
    throw InputError("topological oracle supports at most " + std::to_string(kOracleMaxLeaves) +
                     " taxa");
  }
  if (tree.leaf_count() < 3 || !tree.fully_resolved()) {
    throw InputError("topological oracle needs a fully resolved tree with at least 3 taxa");
  }
  if (!tree.has_proper_weights()) throw InputError("topological oracle needs proper weights");
  return Search(tree, cords, tolerance).run();
}

}  // namespace treelasso
