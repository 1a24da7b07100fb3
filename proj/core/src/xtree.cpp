#include "treelasso/xtree.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

#include "treelasso/errors.hpp"

namespace treelasso {
namespace {

bool is_plain_label_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '.' || c == '-';
}

}  // namespace

bool is_valid_taxon(std::string_view label) {
  std::size_t i = 0;
  while (i < label.size() && is_plain_label_char(label[i])) ++i;
  if (i == 0) return false;
  while (i < label.size() && label[i] == '\'') ++i;
  return i == label.size();
}

std::optional<std::size_t> XTree::find_taxon(std::string_view label) const {
  auto it = std::lower_bound(taxa_.begin(), taxa_.end(), label);
  if (it == taxa_.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - taxa_.begin());
}

std::size_t XTree::taxon_index(std::string_view label) const {
  if (auto idx = find_taxon(label)) return *idx;
  throw InputError("unknown taxon '" + std::string(label) + "'");
}

bool XTree::fully_resolved() const {
  for (Vertex v = leaf_count(); v < vertex_count(); ++v) {
    if (degree(v) != 3) return false;
  }
  return true;
}

bool XTree::has_proper_weights() const {
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (!is_pendant(e) && !(edges_[e].weight > 0.0)) return false;
  }
  return true;
}

XTree XTree::with_weights(std::span<const double> weights) const {
  if (weights.size() != edges_.size()) {
    throw InputError("weight vector has " + std::to_string(weights.size()) + " entries, tree has " +
                     std::to_string(edges_.size()) + " edges");
  }
  XTree out = *this;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (!(weights[e] >= 0.0) || !std::isfinite(weights[e])) {
      throw InputError("edge weights must be finite and non-negative");
    }
    out.edges_[e].weight = weights[e];
  }
  return out;
}

TreeBuilder::Handle TreeBuilder::add_leaf(Taxon label) {
  labels_.emplace_back(std::move(label));
  return labels_.size() - 1;
}

TreeBuilder::Handle TreeBuilder::add_vertex() {
  labels_.emplace_back(std::nullopt);
  return labels_.size() - 1;
}

void TreeBuilder::add_edge(Handle a, Handle b, double weight) {
  edges_.push_back({a, b, weight});
}

XTree TreeBuilder::build() const {
  const std::size_t vertex_total = labels_.size();
  for (const auto& e : edges_) {
    if (e.a >= vertex_total || e.b >= vertex_total) throw InputError("edge refers to unknown vertex");
    if (e.a == e.b) throw InputError("self-loop in tree");
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) {
      throw InputError("negative or non-finite edge weight");
    }
  }
  if (vertex_total == 0 || edges_.size() + 1 != vertex_total) {
    throw InputError("graph is not a tree (vertex and edge counts disagree)");
  }

  // Working adjacency over edge ids; removed edges are flagged dead.
  struct WorkEdge {
    Handle a, b;
    double weight;
    bool alive;
  };
  std::vector<WorkEdge> work;
  work.reserve(edges_.size() * 2);
  std::vector<std::vector<std::size_t>> incident(vertex_total);
  for (const auto& e : edges_) {
    incident[e.a].push_back(work.size());
    incident[e.b].push_back(work.size());
    work.push_back({e.a, e.b, e.weight, true});
  }

  // Connectivity (with |E| = |V|-1 this also rules out cycles).
  {
    std::vector<bool> seen(vertex_total, false);
    std::deque<Handle> queue{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
      Handle v = queue.front();
      queue.pop_front();
      for (std::size_t id : incident[v]) {
        Handle w = work[id].a == v ? work[id].b : work[id].a;
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          queue.push_back(w);
        }
      }
    }
    if (reached != vertex_total) throw InputError("graph is not a tree (disconnected)");
  }

  std::map<std::string_view, Handle> by_label;
  for (Handle v = 0; v < vertex_total; ++v) {
    if (!labels_[v]) continue;
    const Taxon& label = *labels_[v];
    if (!is_valid_taxon(label)) throw InputError("invalid taxon label '" + label + "'");
    if (!by_label.emplace(label, v).second) throw InputError("duplicate taxon label '" + label + "'");
    if (incident[v].size() != 1) {
      throw InputError("labeled vertex '" + label + "' is not a leaf");
    }
  }
  if (by_label.size() < 2) throw InputError("an X-tree needs at least two taxa");

  auto live_degree = [&](Handle v) { return incident[v].size(); };
  for (Handle v = 0; v < vertex_total; ++v) {
    if (!labels_[v] && live_degree(v) == 1) throw InputError("unlabeled leaf vertex");
  }

  // Suppress unlabeled degree-2 vertices.
  std::vector<bool> removed(vertex_total, false);
  for (Handle v = 0; v < vertex_total; ++v) {
    if (labels_[v] || incident[v].size() != 2) continue;
    std::size_t e1 = incident[v][0];
    std::size_t e2 = incident[v][1];
    Handle x = work[e1].a == v ? work[e1].b : work[e1].a;
    Handle y = work[e2].a == v ? work[e2].b : work[e2].a;
    work[e1].alive = false;
    work[e2].alive = false;
    std::size_t merged = work.size();
    work.push_back({x, y, work[e1].weight + work[e2].weight, true});
    std::replace(incident[x].begin(), incident[x].end(), e1, merged);
    std::replace(incident[y].begin(), incident[y].end(), e2, merged);
    incident[v].clear();
    removed[v] = true;
  }

  XTree tree;
  std::vector<std::size_t> new_id(vertex_total, SIZE_MAX);
  std::size_t next = 0;
  for (const auto& [label, handle] : by_label) {
    tree.taxa_.emplace_back(label);
    new_id[handle] = next++;
  }

  // Interior ids in BFS order from the smallest taxon.
  std::vector<Handle> bfs_order;
  {
    std::vector<bool> seen(vertex_total, false);
    std::deque<Handle> queue{by_label.begin()->second};
    seen[queue.front()] = true;
    while (!queue.empty()) {
      Handle v = queue.front();
      queue.pop_front();
      bfs_order.push_back(v);
      for (std::size_t id : incident[v]) {
        Handle w = work[id].a == v ? work[id].b : work[id].a;
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  for (Handle v : bfs_order) {
    if (new_id[v] == SIZE_MAX) new_id[v] = next++;
  }

  tree.adjacency_.resize(next);
  std::vector<bool> emitted(work.size(), false);
  for (Handle v : bfs_order) {
    for (std::size_t id : incident[v]) {
      if (emitted[id] || !work[id].alive) continue;
      emitted[id] = true;
      XTree::Edge edge{new_id[work[id].a], new_id[work[id].b], work[id].weight};
      XTree::EdgeId eid = tree.edges_.size();
      tree.edges_.push_back(edge);
      tree.adjacency_[edge.u].push_back({edge.v, eid});
      tree.adjacency_[edge.v].push_back({edge.u, eid});
    }
  }
  return tree;
}

}  // namespace treelasso
