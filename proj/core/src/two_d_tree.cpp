#include "treelasso/two_d_tree.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "detail/cord_matrix.hpp"
#include "treelasso/errors.hpp"

namespace treelasso {
namespace {

class Eliminator {
 public:
  Eliminator(const detail::CordMatrix& graph, bool greedy)
      : graph_(graph), greedy_(greedy), alive_(graph.size(), true), degree_(graph.size(), 0) {
    for (std::size_t a = 0; a < graph.size(); ++a) {
      for (std::size_t b = 0; b < graph.size(); ++b) degree_[a] += graph.has(a, b) ? 1 : 0;
    }
  }

  // Fills `removed` with the elimination sequence on success.
  bool run(std::size_t remaining) {
    if (remaining == 2) return true;
    if (failed_.contains(alive_)) return false;
    for (std::size_t v = 0; v < alive_.size(); ++v) {
      if (!alive_[v] || degree_[v] != 2) continue;
      remove(v);
      if (run(remaining - 1)) return true;
      restore(v);
      if (greedy_) break;
    }
    failed_.insert(alive_);
    return false;
  }

  const std::vector<std::size_t>& removed() const noexcept { return removed_; }
  const std::vector<bool>& alive() const noexcept { return alive_; }

 private:
  void remove(std::size_t v) {
    alive_[v] = false;
    removed_.push_back(v);
    for (std::size_t u = 0; u < alive_.size(); ++u) {
      if (alive_[u] && graph_.has(u, v)) --degree_[u];
    }
  }
  void restore(std::size_t v) {
    for (std::size_t u = 0; u < alive_.size(); ++u) {
      if (alive_[u] && graph_.has(u, v)) ++degree_[u];
    }
    alive_[v] = true;
    removed_.pop_back();
  }

  const detail::CordMatrix& graph_;
  bool greedy_;
  std::vector<bool> alive_;
  std::vector<std::size_t> degree_;
  std::vector<std::size_t> removed_;
  std::set<std::vector<bool>> failed_;
};

// Unit-weight working tree that grows by edge subdivision.
struct GrowingTree {
  std::vector<std::vector<std::size_t>> adj;

  std::size_t add_vertex() {
    adj.emplace_back();
    return adj.size() - 1;
  }
  void link(std::size_t a, std::size_t b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  void unlink(std::size_t a, std::size_t b) {
    std::erase(adj[a], b);
    std::erase(adj[b], a);
  }
  std::vector<std::size_t> path(std::size_t from, std::size_t to) const {
    std::vector<std::size_t> prev(adj.size(), adj.size());
    std::deque<std::size_t> queue{from};
    prev[from] = from;
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      for (auto w : adj[v]) {
        if (prev[w] != adj.size()) continue;
        prev[w] = v;
        queue.push_back(w);
      }
    }
    std::vector<std::size_t> out{to};
    while (out.back() != from) out.push_back(prev[out.back()]);
    std::reverse(out.begin(), out.end());
    return out;
  }
};

}  // namespace

std::optional<std::vector<Taxon>> is_2dtree(const CordSet& cords, const TaxonSet& taxa,
                                            const TwoDTreeOptions& options) {
  const std::vector<Taxon> names(taxa.begin(), taxa.end());
  detail::CordMatrix graph(names, cords);
  const std::size_t n = names.size();
  if (n < 2 || cords.size() != 2 * n - 3) return std::nullopt;

  Eliminator elim(graph, options.greedy_only);
  if (!elim.run(n)) return std::nullopt;
  std::vector<Taxon> ordering;
  for (std::size_t v = 0; v < n; ++v) {
    if (elim.alive()[v]) ordering.push_back(names[v]);
  }
  const auto& removed = elim.removed();
  for (auto it = removed.rbegin(); it != removed.rend(); ++it) ordering.push_back(names[*it]);
  return ordering;
}

bool is_2dtree_ordering(const CordSet& cords, const std::vector<Taxon>& ordering) {
  const TaxonSet taxa(ordering.begin(), ordering.end());
  if (taxa.size() != ordering.size() || ordering.size() < 2) return false;
  for (const auto& t : taxa_of(cords)) {
    if (!taxa.contains(t)) return false;
  }
  if (!cords.contains(Cord(ordering[0], ordering[1]))) return false;
  for (std::size_t i = 2; i < ordering.size(); ++i) {
    std::size_t back = 0;
    for (std::size_t j = 0; j < i; ++j) back += cords.contains(Cord(ordering[i], ordering[j])) ? 1 : 0;
    if (back != 2) return false;
  }
  return true;
}

XTree tree_from_2dtree(const CordSet& cords, const std::vector<Taxon>& ordering) {
  if (!is_2dtree_ordering(cords, ordering)) {
    throw InputError("ordering is not a 2d-tree ordering of the cords");
  }
  const std::size_t n = ordering.size();
  GrowingTree tree;
  std::vector<std::size_t> leaf(n);
  leaf[0] = tree.add_vertex();
  leaf[1] = tree.add_vertex();
  tree.link(leaf[0], leaf[1]);
  for (std::size_t i = 2; i < n; ++i) {
    std::vector<std::size_t> back;
    for (std::size_t j = 0; j < i; ++j) {
      if (cords.contains(Cord(ordering[i], ordering[j]))) back.push_back(j);
    }
    const auto path = tree.path(leaf[back[0]], leaf[back[1]]);
    // Edge t runs from path[t] to path[t+1]; with m unit edges the midpoint
    // edge is (m-1)/2, which picks the xj side on a tie.
    const std::size_t m = path.size() - 1;
    const std::size_t t = (m - 1) / 2;
    const auto mid = tree.add_vertex();
    tree.unlink(path[t], path[t + 1]);
    tree.link(path[t], mid);
    tree.link(mid, path[t + 1]);
    leaf[i] = tree.add_vertex();
    tree.link(mid, leaf[i]);
  }

  TreeBuilder builder;
  std::vector<TreeBuilder::Handle> handle(tree.adj.size(), 0);
  std::vector<bool> is_leaf(tree.adj.size(), false);
  for (std::size_t i = 0; i < n; ++i) is_leaf[leaf[i]] = true;
  for (std::size_t i = 0; i < n; ++i) handle[leaf[i]] = builder.add_leaf(ordering[i]);
  for (std::size_t v = 0; v < tree.adj.size(); ++v) {
    if (!is_leaf[v]) handle[v] = builder.add_vertex();
  }
  for (std::size_t v = 0; v < tree.adj.size(); ++v) {
    for (auto w : tree.adj[v]) {
      if (v < w) builder.add_edge(handle[v], handle[w], 1.0);
    }
  }
  return builder.build();
}

}  // namespace treelasso
