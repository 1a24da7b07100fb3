#include "treelasso/cover.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "detail/cord_matrix.hpp"
#include "detail/rooted.hpp"
#include "treelasso/errors.hpp"

namespace treelasso {
namespace {

using detail::LeafSet;
constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();

// Distinct clusters, smallest first.
std::vector<LeafSet> cluster_sets(const detail::RootedView& view) {
  const XTree& tree = view.tree();
  std::vector<LeafSet> out;
  for (XTree::EdgeId e = 0; e < tree.edge_count(); ++e) {
    LeafSet lower = view.below(view.lower_endpoint(e));
    LeafSet upper = lower;
    upper.flip();
    out.push_back(std::move(lower));
    out.push_back(std::move(upper));
  }
  std::sort(out.begin(), out.end(), [](const LeafSet& a, const LeafSet& b) {
    return a.count() != b.count() ? a.count() < b.count() : a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::map<LeafSet, std::size_t> to_indexed(const XTree& tree, const Transversal& f) {
  std::map<LeafSet, std::size_t> out;
  for (const auto& [cluster, image] : f) {
    out.emplace(detail::to_leaves(tree, cluster), tree.taxon_index(image));
  }
  return out;
}

std::vector<std::size_t> rank_of(const XTree& tree, const std::vector<Taxon>& order) {
  std::vector<std::size_t> rank(tree.leaf_count(), kUnassigned);
  if (order.size() != tree.leaf_count()) {
    throw InputError("order must list every taxon exactly once");
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto t = tree.taxon_index(order[i]);
    if (rank[t] != kUnassigned) throw InputError("order repeats taxon '" + order[i] + "'");
    rank[t] = i;
  }
  return rank;
}

std::string describe(const TaxonSet& taxa) {
  std::string out = "{";
  for (const auto& t : taxa) out += (out.size() > 1 ? "," : "") + t;
  return out + "}";
}

void require_fully_resolved(const XTree& tree) {
  if (!tree.fully_resolved()) throw InputError("tree is not fully resolved");
}

// Leaf -> component id (0..2) for the three components of tree - v.
std::vector<int> components_around(const detail::RootedView& view, XTree::Vertex v) {
  const XTree& tree = view.tree();
  std::vector<int> comp(tree.leaf_count(), -1);
  int id = 0;
  for (const auto& inc : tree.neighbors(v)) {
    LeafSet side = view.side(v, inc.to);
    for (auto i = side.find_first(); i != LeafSet::npos; i = side.find_next(i)) comp[i] = id;
    ++id;
  }
  return comp;
}

}  // namespace

StabilityReport is_stable(const Transversal& f, const XTree& tree) {
  detail::RootedView view(tree);
  const auto clusters = cluster_sets(view);
  const auto indexed = to_indexed(tree, f);
  for (const auto& [cluster, image] : indexed) {
    if (!std::binary_search(clusters.begin(), clusters.end(), cluster,
                            [](const LeafSet& a, const LeafSet& b) {
                              return a.count() != b.count() ? a.count() < b.count() : a < b;
                            })) {
      throw InputError("transversal assigns a set that is not a cluster of the tree");
    }
  }
  std::vector<std::size_t> image(clusters.size());
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    auto it = indexed.find(clusters[i]);
    if (it == indexed.end()) {
      throw InputError("transversal is not defined on cluster " +
                       describe(detail::to_taxa(tree, clusters[i])));
    }
    image[i] = it->second;
  }

  StabilityReport report;
  for (std::size_t a = 0; a < clusters.size(); ++a) {
    if (!clusters[a].test(image[a])) {
      report.stable = false;
      report.outer = report.inner = detail::to_taxa(tree, clusters[a]);
      report.reason = "f(A) = " + tree.label(image[a]) + " is not in A";
      return report;
    }
  }
  for (std::size_t a = 0; a < clusters.size(); ++a) {
    for (std::size_t b = 0; b < clusters.size(); ++b) {
      if (a == b || !clusters[b].test(image[a]) || !clusters[b].is_subset_of(clusters[a])) continue;
      if (image[a] != image[b]) {
        report.stable = false;
        report.outer = detail::to_taxa(tree, clusters[a]);
        report.inner = detail::to_taxa(tree, clusters[b]);
        report.reason = "f(A) = " + tree.label(image[a]) + " lies in B subset of A but f(B) = " +
                        tree.label(image[b]);
        return report;
      }
    }
  }
  return report;
}

Transversal min_order_transversal(const XTree& tree, const std::vector<Taxon>& order) {
  const auto rank = rank_of(tree, order);
  detail::RootedView view(tree);
  Transversal out;
  for (const auto& cluster : cluster_sets(view)) {
    std::size_t best = kUnassigned;
    for (auto i = cluster.find_first(); i != LeafSet::npos; i = cluster.find_next(i)) {
      if (best == kUnassigned || rank[i] < rank[best]) best = i;
    }
    out.emplace(detail::to_taxa(tree, cluster), tree.label(best));
  }
  return out;
}

Transversal closest_leaf_transversal(const XTree& tree, LeafPreference preference,
                                     const std::vector<Taxon>& tiebreak,
                                     const Tolerance& tolerance) {
  if (!tree.has_proper_weights()) {
    throw InputError("closest/furthest transversal needs positive interior edge weights");
  }
  const auto rank = rank_of(tree, tiebreak);
  detail::RootedView view(tree);
  Transversal out;

  // Leaf distances from `inner`, never crossing back over to `outer`.
  std::vector<double> dist(tree.vertex_count());
  auto choose = [&](XTree::Vertex outer, XTree::Vertex inner) {
    std::vector<std::pair<XTree::Vertex, XTree::Vertex>> stack{{inner, outer}};
    std::vector<std::pair<std::size_t, double>> leaves;
    dist[inner] = 0.0;
    while (!stack.empty()) {
      auto [v, from] = stack.back();
      stack.pop_back();
      if (tree.is_leaf(v)) leaves.emplace_back(v, dist[v]);
      for (const auto& inc : tree.neighbors(v)) {
        if (inc.to == from) continue;
        dist[inc.to] = dist[v] + tree.edge(inc.edge).weight;
        stack.emplace_back(inc.to, v);
      }
    }
    double target = leaves.front().second;
    for (const auto& [leaf, d] : leaves) {
      target = preference == LeafPreference::closest ? std::min(target, d) : std::max(target, d);
    }
    std::size_t best = kUnassigned;
    for (const auto& [leaf, d] : leaves) {
      if (!tolerance.equal(d, target)) continue;
      if (best == kUnassigned || rank[leaf] < rank[best]) best = leaf;
    }
    return best;
  };

  for (const auto& e : tree.edges()) {
    for (auto [outer, inner] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      out.emplace(detail::to_taxa(tree, view.side(outer, inner)), tree.label(choose(outer, inner)));
    }
  }
  return out;
}

CordSet triplet_cover(const XTree& tree, const Transversal& f, bool force) {
  require_fully_resolved(tree);
  if (!force) {
    auto report = is_stable(f, tree);
    if (!report) throw InputError("transversal is not stable: " + report.reason);
  }
  detail::RootedView view(tree);
  CordSet out;
  for (XTree::Vertex v = tree.leaf_count(); v < tree.vertex_count(); ++v) {
    std::array<Taxon, 3> images;
    std::size_t k = 0;
    for (const auto& inc : tree.neighbors(v)) {
      TaxonSet side = detail::to_taxa(tree, view.side(v, inc.to));
      auto it = f.find(side);
      if (it == f.end()) throw InputError("transversal is not defined on a component cluster");
      if (!side.contains(it->second)) {
        throw InputError("transversal violates f(A) in A at taxon '" + it->second + "'");
      }
      images[k++] = it->second;
    }
    out.emplace(images[0], images[1]);
    out.emplace(images[1], images[2]);
    out.emplace(images[2], images[0]);
  }
  return out;
}

bool is_cover(const XTree& tree, const CordSet& cords) {
  require_fully_resolved(tree);
  detail::CordMatrix matrix(tree.taxa(), cords);  // validates the taxa
  detail::RootedView view(tree);
  for (XTree::Vertex v = tree.leaf_count(); v < tree.vertex_count(); ++v) {
    const auto comp = components_around(view, v);
    std::array<bool, 3> hit{false, false, false};  // pairs {0,1},{1,2},{0,2} by missing id
    for (const auto& cord : cords) {
      int a = comp[tree.taxon_index(cord.first())];
      int b = comp[tree.taxon_index(cord.second())];
      if (a != b) hit[static_cast<std::size_t>(3 - a - b)] = true;
    }
    if (!(hit[0] && hit[1] && hit[2])) return false;
  }
  return true;
}

bool is_triplet_cover(const XTree& tree, const CordSet& cords) {
  require_fully_resolved(tree);
  detail::CordMatrix matrix(tree.taxa(), cords);
  detail::RootedView view(tree);
  const std::size_t n = tree.leaf_count();
  for (XTree::Vertex v = tree.leaf_count(); v < tree.vertex_count(); ++v) {
    const auto comp = components_around(view, v);
    bool found = false;
    for (const auto& cord : cords) {
      const auto a = tree.taxon_index(cord.first());
      const auto b = tree.taxon_index(cord.second());
      if (comp[a] == comp[b]) continue;
      const int third = 3 - comp[a] - comp[b];
      for (std::size_t c = 0; c < n && !found; ++c) {
        found = comp[c] == third && matrix.has(a, c) && matrix.has(b, c);
      }
      if (found) break;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace treelasso
