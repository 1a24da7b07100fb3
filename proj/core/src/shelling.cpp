#include "treelasso/shelling.hpp"

#include <algorithm>
#include <random>

#include "detail/cord_matrix.hpp"
#include "detail/rooted.hpp"
#include "treelasso/errors.hpp"

namespace treelasso {
namespace {

struct QuartetOracle {
  std::vector<std::vector<double>> hops;

  // {a,x} | {y,b} in a fully resolved tree: the split pairing has the
  // strictly smallest hop sum.
  bool separates(std::size_t a, std::size_t x, std::size_t y, std::size_t b) const {
    return hops[a][x] + hops[y][b] < hops[a][y] + hops[x][b] &&
           hops[a][x] + hops[y][b] < hops[a][b] + hops[x][y];
  }
};

bool others_known(const detail::CordMatrix& known, std::size_t a, std::size_t b, std::size_t x,
                  std::size_t y) {
  return known.has(a, x) && known.has(a, y) && known.has(b, x) && known.has(b, y) &&
         known.has(x, y);
}

void check_tree(const XTree& tree) {
  if (!tree.fully_resolved()) throw InputError("tree is not fully resolved");
}

}  // namespace

ShellingResult is_shellable(const XTree& tree, const CordSet& cords,
                            const ShellingOptions& options) {
  check_tree(tree);
  const auto& taxa = tree.taxa();
  const std::size_t n = taxa.size();
  detail::CordMatrix known(taxa, cords);
  const QuartetOracle quartets{detail::leaf_distances(tree, true)};

  std::vector<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!known.has(a, b)) pending.emplace_back(a, b);
    }
  }
  if (options.shuffle_seed) {
    std::mt19937_64 rng(*options.shuffle_seed);
    std::shuffle(pending.begin(), pending.end(), rng);
  }

  ShellingResult result;
  bool changed = true;
  while (changed && !pending.empty()) {
    changed = false;
    for (auto it = pending.begin(); it != pending.end();) {
      const auto [a, b] = *it;
      bool added = false;
      for (std::size_t x = 0; x < n && !added; ++x) {
        if (x == a || x == b || !known.has(a, x) || !known.has(b, x)) continue;
        for (std::size_t y = 0; y < n && !added; ++y) {
          if (y == a || y == b || y == x) continue;
          if (!others_known(known, a, b, x, y) || !quartets.separates(a, x, y, b)) continue;
          known.set(a, b);
          result.trace.push_back({Cord(taxa[a], taxa[b]), {taxa[x], taxa[y]}});
          added = true;
        }
      }
      if (added) {
        it = pending.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  for (const auto& [a, b] : pending) result.unreachable.emplace(taxa[a], taxa[b]);
  result.shellable = pending.empty();
  return result;
}

ShellingValidation validate_shelling(const XTree& tree, const CordSet& cords,
                                     const ShellingTrace& trace) {
  check_tree(tree);
  const auto& taxa = tree.taxa();
  detail::CordMatrix known(taxa, cords);
  const QuartetOracle quartets{detail::leaf_distances(tree, true)};
  auto fail = [](std::size_t step, std::string reason) {
    return ShellingValidation{false, step, std::move(reason)};
  };

  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& step = trace[i];
    const auto a = detail::CordMatrix::index_of(taxa, step.cord.first());
    const auto b = detail::CordMatrix::index_of(taxa, step.cord.second());
    const auto x = detail::CordMatrix::index_of(taxa, step.pivots.first);
    const auto y = detail::CordMatrix::index_of(taxa, step.pivots.second);
    const std::string name = step.cord.first() + " " + step.cord.second();
    if (known.has(a, b)) return fail(i, "cord " + name + " is already known");
    if (x == y || x == a || x == b || y == a || y == b) {
      return fail(i, "pivots of " + name + " must be two further taxa");
    }
    if (!others_known(known, a, b, x, y)) {
      return fail(i, "cord " + name + ": not all other cords of the quartet are known");
    }
    if (!quartets.separates(a, x, y, b) && !quartets.separates(a, y, x, b)) {
      return fail(i, "cord " + name + ": pivots do not separate its ends");
    }
    known.set(a, b);
  }
  const std::size_t n = taxa.size();
  if (known.count() != n * (n - 1) / 2) {
    return fail(trace.size(), "trace ends with cords still missing");
  }
  return {};
}

std::string format_shelling_trace(const ShellingTrace& trace) {
  std::string out;
  for (const auto& step : trace) {
    out += step.cord.first() + " " + step.cord.second() + " | pivots " + step.pivots.first + " " +
           step.pivots.second + "\n";
  }
  return out;
}

}  // namespace treelasso
