#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "treelasso/treelasso.hpp"

namespace fixtures {

using namespace treelasso;

inline std::string path(const std::string& name) { return std::string(TREELASSO_FIXTURE_DIR) + "/" + name; }

inline std::string read_path(const std::string& file) {
  std::ifstream in(file);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string read(const std::string& name) { return read_path(path(name)); }

inline XTree caterpillar_tree() { return parse_newick(read("caterpillar_tree.nwk")); }
inline XTree primed_tree() { return parse_newick(read("primed_tree.nwk")); }
inline XTree quartet_tree() { return parse_newick(read("quartet_tree.nwk")); }

inline CordSet cords(std::initializer_list<std::pair<const char*, const char*>> list) {
  CordSet out;
  for (auto [a, b] : list) out.emplace(a, b);
  return out;
}

inline CordSet caterpillar_cords() {
  return cords({{"a", "b"}, {"b", "d"}, {"a", "d"}, {"b", "c"}, {"b", "f"}, {"a", "g"},
                {"d", "g"}, {"e", "b"}, {"e", "f"}, {"f", "g"}, {"g", "c"}});
}

inline CordSet primed_cords() {
  return cords({{"a", "b"}, {"a", "c"}, {"b", "c"}, {"a", "a'"}, {"a'", "b"}, {"b", "b'"},
                {"b'", "c"}, {"c", "c'"}, {"c'", "a"}});
}

inline CordSet quartet_cords() {
  return cords({{"a", "b"}, {"a", "c"}, {"b", "c"}, {"a", "d"}, {"b", "d"}});
}

inline TaxonSet set_of(std::initializer_list<const char*> list) { return {list.begin(), list.end()}; }

/// six-taxon primed's transversal, completed on the co-singletons in the only way
/// that keeps it stable.
inline Transversal primed_transversal() {
  const TaxonSet all = set_of({"a", "a'", "b", "b'", "c", "c'"});
  auto without = [&](std::initializer_list<const char*> drop) {
    TaxonSet s = all;
    for (auto t : drop) s.erase(t);
    return s;
  };
  Transversal f;
  for (const auto& t : all) f[{t}] = t;
  f[set_of({"a", "a'"})] = "a";
  f[set_of({"b", "b'"})] = "b";
  f[set_of({"c", "c'"})] = "c";
  f[without({"a", "a'"})] = "b";
  f[without({"b", "b'"})] = "c";
  f[without({"c", "c'"})] = "a";
  f[without({"a"})] = "b";
  f[without({"a'"})] = "b";
  f[without({"b"})] = "c";
  f[without({"b'"})] = "c";
  f[without({"c"})] = "a";
  f[without({"c'"})] = "a";
  return f;
}

/// Reference shelling of the seven-taxon caterpillar cords, pivots as published.
inline ShellingTrace caterpillar_published_trace() {
  const char* steps[][4] = {{"b", "g", "a", "d"}, {"c", "d", "b", "g"}, {"a", "c", "b", "d"},
                            {"c", "f", "b", "g"}, {"c", "e", "b", "f"}, {"a", "f", "b", "g"},
                            {"d", "f", "b", "g"}, {"a", "e", "b", "f"}, {"e", "g", "a", "f"},
                            {"e", "d", "b", "f"}};
  ShellingTrace trace;
  for (auto& s : steps) trace.push_back({Cord(s[0], s[1]), {s[2], s[3]}});
  return trace;
}

// ---- independent oracles -------------------------------------------------

/// All-pairs leaf distances by Floyd-Warshall over the vertex graph.
inline std::vector<std::vector<double>> floyd_distances(const XTree& tree) {
  const std::size_t v = tree.vertex_count();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> d(v, std::vector<double>(v, inf));
  for (std::size_t i = 0; i < v; ++i) d[i][i] = 0.0;
  for (const auto& e : tree.edges()) d[e.u][e.v] = d[e.v][e.u] = e.weight;
  for (std::size_t k = 0; k < v; ++k)
    for (std::size_t i = 0; i < v; ++i)
      for (std::size_t j = 0; j < v; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  d.resize(tree.leaf_count());
  for (auto& row : d) row.resize(tree.leaf_count());
  return d;
}

inline double floyd(const XTree& tree, const std::string& a, const std::string& b) {
  return floyd_distances(tree)[tree.taxon_index(a)][tree.taxon_index(b)];
}

/// Every cord's distance by Floyd-Warshall.
inline PartialDistance distances_on(const XTree& tree, const CordSet& cords) {
  const auto d = floyd_distances(tree);
  PartialDistance out;
  for (const auto& c : cords) out[c] = d[tree.taxon_index(c.first())][tree.taxon_index(c.second())];
  return out;
}

/// Rank over the rationals by Gauss-Jordan elimination.
inline std::size_t rational_rank(const std::vector<std::vector<std::uint8_t>>& matrix) {
  using Q = boost::multiprecision::cpp_rational;
  std::vector<std::vector<Q>> m;
  for (const auto& row : matrix) m.emplace_back(row.begin(), row.end());
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c] == 0) continue;
      Q f = m[i][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Leaves of each component of the tree with vertex v removed, by BFS.
inline std::vector<std::vector<std::size_t>> components_without(const XTree& tree, std::size_t v) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& start : tree.neighbors(v)) {
    std::vector<std::size_t> leaves;
    std::vector<bool> seen(tree.vertex_count(), false);
    seen[v] = seen[start.to] = true;
    std::vector<std::size_t> queue{start.to};
    while (!queue.empty()) {
      auto u = queue.back();
      queue.pop_back();
      if (tree.is_leaf(u)) leaves.push_back(u);
      for (const auto& inc : tree.neighbors(u)) {
        if (!seen[inc.to]) {
          seen[inc.to] = true;
          queue.push_back(inc.to);
        }
      }
    }
    out.push_back(leaves);
  }
  return out;
}

/// Triangle search over all leaf triples, one from each component.
inline bool brute_triplet_cover(const XTree& tree, const CordSet& cords) {
  const auto& taxa = tree.taxa();
  auto has = [&](std::size_t a, std::size_t b) { return cords.contains(Cord(taxa[a], taxa[b])); };
  for (std::size_t v = tree.leaf_count(); v < tree.vertex_count(); ++v) {
    const auto comp = components_without(tree, v);
    bool found = false;
    for (auto a : comp[0])
      for (auto b : comp[1])
        for (auto c : comp[2]) found = found || (has(a, b) && has(b, c) && has(a, c));
    if (!found) return false;
  }
  return true;
}

/// Search over every permutation for a 2d-tree ordering (small n only).
inline bool brute_2dtree(const CordSet& cords, std::vector<Taxon> taxa) {
  std::sort(taxa.begin(), taxa.end());
  do {
    if (is_2dtree_ordering(cords, taxa)) return true;
  } while (std::next_permutation(taxa.begin(), taxa.end()));
  return false;
}

/// Quartet from weighted four-point sums.
inline Quartet four_point(const XTree& tree, const std::string& a, const std::string& b,
                          const std::string& c, const std::string& d) {
  const auto m = floyd_distances(tree);
  auto at = [&](const std::string& x, const std::string& y) {
    return m[tree.taxon_index(x)][tree.taxon_index(y)];
  };
  const double s1 = at(a, b) + at(c, d), s2 = at(a, c) + at(b, d), s3 = at(a, d) + at(b, c);
  const double lo = std::min({s1, s2, s3});
  const int hits = (s1 == lo) + (s2 == lo) + (s3 == lo);
  if (hits > 1) return Quartet::star;
  return s1 == lo ? Quartet::ab_cd : s2 == lo ? Quartet::ac_bd : Quartet::ad_bc;
}

}  // namespace fixtures
