#include "treelasso/neighbor_joining.hpp"

#include <cmath>
#include <vector>

#include "detail/rooted.hpp"
#include "treelasso/errors.hpp"
#include "treelasso/newick.hpp"

namespace treelasso {
namespace {

class Joiner {
 public:
  Joiner(const std::vector<Taxon>& names, const PartialDistance& distances,
         const Tolerance& tolerance)
      : tolerance_(tolerance) {
    const std::size_t n = names.size();
    d_.assign(n, std::vector<double>(n, 0.0));
    for (const auto& [cord, value] : distances) {
      const auto a = index(names, cord.first());
      const auto b = index(names, cord.second());
      d_[a][b] = d_[b][a] = value;
      scale_ = std::max(scale_, value);
    }
    for (std::size_t i = 0; i < n; ++i) {
      active_.push_back(i);
      handle_.push_back(builder_.add_leaf(names[i]));
    }
  }

  XTree run() {
    if (active_.size() == 2) {
      builder_.add_edge(handle_[0], handle_[1], length(d_[0][1]));
      return builder_.build();
    }
    while (active_.size() > 3) join_best();
    const auto i = active_[0], j = active_[1], k = active_[2];
    const auto centre = builder_.add_vertex();
    builder_.add_edge(centre, handle_[i], length((d_[i][j] + d_[i][k] - d_[j][k]) / 2));
    builder_.add_edge(centre, handle_[j], length((d_[i][j] + d_[j][k] - d_[i][k]) / 2));
    builder_.add_edge(centre, handle_[k], length((d_[i][k] + d_[j][k] - d_[i][j]) / 2));
    return builder_.build();
  }

 private:
  static std::size_t index(const std::vector<Taxon>& names, const Taxon& t) {
    return static_cast<std::size_t>(std::lower_bound(names.begin(), names.end(), t) -
                                    names.begin());
  }

  double length(double value) const {
    const double eps = tolerance_.epsilon * scale_;
    if (value >= 0.0) return value;
    if (value >= -eps) return 0.0;
    throw InconsistencyError("neighbor joining produced branch length " + format_number(value) +
                             "; input is not a tree metric");
  }

  void join_best() {
    const std::size_t r = active_.size();
    std::vector<double> sum(r, 0.0);
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t b = 0; b < r; ++b) sum[a] += d_[active_[a]][active_[b]];
    }
    std::size_t best_a = 0, best_b = 1;
    double best_q = 0.0;
    bool first = true;
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t b = a + 1; b < r; ++b) {
        const double q = static_cast<double>(r - 2) * d_[active_[a]][active_[b]] - sum[a] - sum[b];
        if (first || tolerance_.less(q, best_q)) {
          best_q = q;
          best_a = a;
          best_b = b;
          first = false;
        }
      }
    }

    const auto i = active_[best_a], j = active_[best_b];
    const double dij = d_[i][j];
    const double li = dij / 2 + (sum[best_a] - sum[best_b]) / (2.0 * static_cast<double>(r - 2));
    const double lj = dij - li;

    const std::size_t u = d_.size();
    for (auto& row : d_) row.push_back(0.0);
    d_.emplace_back(u + 1, 0.0);
    for (auto k : active_) {
      if (k == i || k == j) continue;
      d_[u][k] = d_[k][u] = (d_[i][k] + d_[j][k] - dij) / 2;
    }
    const auto node = builder_.add_vertex();
    builder_.add_edge(node, handle_[i], length(li));
    builder_.add_edge(node, handle_[j], length(lj));
    handle_.push_back(node);

    active_.erase(active_.begin() + static_cast<std::ptrdiff_t>(best_b));
    active_.erase(active_.begin() + static_cast<std::ptrdiff_t>(best_a));
    active_.push_back(u);
  }

  Tolerance tolerance_;
  double scale_ = 1.0;
  std::vector<std::vector<double>> d_;
  std::vector<std::size_t> active_;
  std::vector<TreeBuilder::Handle> handle_;
  TreeBuilder builder_;
};

}  // namespace

XTree neighbor_joining(const PartialDistance& distances, const NeighborJoiningOptions& options) {
  const TaxonSet taxa = taxa_of(distances);
  const std::size_t n = taxa.size();
  if (n < 2) throw InputError("neighbor joining needs at least two taxa");
  if (distances.size() != n * (n - 1) / 2) {
    throw InputError("neighbor joining needs a distance for every pair of taxa");
  }
  for (const auto& [cord, value] : distances) {
    if (!(value >= 0.0)) throw InputError("distances must be non-negative");
  }
  const std::vector<Taxon> names(taxa.begin(), taxa.end());
  XTree tree = Joiner(names, distances, options.tolerance).run();

  const auto actual = detail::leaf_distances(tree);
  for (const auto& [cord, value] : distances) {
    const double got = actual[tree.taxon_index(cord.first())][tree.taxon_index(cord.second())];
    if (std::abs(got - value) > options.verification_tolerance * std::max(1.0, value)) {
      throw InconsistencyError("neighbor joining tree gives " + format_number(got) + " for " +
                               cord.first() + " " + cord.second() + " instead of " +
                               format_number(value) + "; input is not a tree metric");
    }
  }
  return tree;
}

}  // namespace treelasso
