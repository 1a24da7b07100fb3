#include "treelasso/closure.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "treelasso/errors.hpp"
#include "treelasso/newick.hpp"

namespace treelasso {
namespace {

using Rational = boost::multiprecision::cpp_rational;

struct FloatArithmetic {
  using Number = double;
  Tolerance tolerance;

  Number from_double(double v) const { return v; }
  double to_double(Number v) const { return v; }
  bool less(Number a, Number b) const { return tolerance.less(a, b); }
  bool equal(Number a, Number b) const { return tolerance.equal(a, b); }
  bool negative(Number a) const { return a < -tolerance.scale(a, 0.0); }
};

struct ExactArithmetic {
  using Number = Rational;

  Number from_double(double v) const { return Number(v); }
  double to_double(const Number& v) const { return v.convert_to<double>(); }
  bool less(const Number& a, const Number& b) const { return a < b; }
  bool equal(const Number& a, const Number& b) const { return a == b; }
  bool negative(const Number& a) const { return a < 0; }
};

template <typename Arithmetic>
ClosureTrace run_closure(const PartialDistance& distances, const TaxonSet& taxa,
                         const Arithmetic& arith) {
  using Number = typename Arithmetic::Number;
  const std::vector<Taxon> names(taxa.begin(), taxa.end());
  const std::size_t n = names.size();
  auto index = [&](const Taxon& t) {
    return static_cast<std::size_t>(std::lower_bound(names.begin(), names.end(), t) -
                                    names.begin());
  };

  std::vector<char> known(n * n, 0);
  std::vector<Number> value(n * n);
  for (const auto& [cord, d] : distances) {
    const auto a = index(cord.first());
    const auto b = index(cord.second());
    known[a * n + b] = known[b * n + a] = 1;
    value[a * n + b] = value[b * n + a] = arith.from_double(d);
  }
  auto has = [&](std::size_t a, std::size_t b) { return known[a * n + b] != 0; };
  auto d = [&](std::size_t a, std::size_t b) -> const Number& { return value[a * n + b]; };

  ClosureTrace trace;
  trace.taxa = taxa;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t z = x + 1; z < n; ++z) {
        if (has(x, z)) continue;
        bool found = false;
        Number derived{};
        std::array<std::size_t, 4> quad{};
        for (std::size_t y = 0; y < n; ++y) {
          if (y == x || y == z || !has(x, y) || !has(y, z)) continue;
          for (std::size_t u = 0; u < n; ++u) {
            if (u == x || u == z || u == y || !has(x, u) || !has(u, z) || !has(y, u)) continue;
            if (!arith.less(d(x, y) + d(u, z), d(x, u) + d(y, z))) continue;
            Number candidate = d(x, u) + d(y, z) - d(y, u);
            if (!found) {
              found = true;
              derived = candidate;
              quad = {x, y, u, z};
            } else if (!arith.equal(candidate, derived)) {
              throw InconsistencyError(
                  "cord " + names[x] + " " + names[z] + " derives to both " +
                  format_number(arith.to_double(derived)) + " (via " + names[quad[1]] + "," +
                  names[quad[2]] + ") and " + format_number(arith.to_double(candidate)) +
                  " (via " + names[y] + "," + names[u] + "); input is not a tree metric");
            }
          }
        }
        if (!found) continue;
        if (arith.negative(derived)) {
          throw InconsistencyError("cord " + names[x] + " " + names[z] +
                                   " derives to a negative distance; input is not a tree metric");
        }
        known[x * n + z] = known[z * n + x] = 1;
        value[x * n + z] = value[z * n + x] = derived;
        trace.steps.push_back({Cord(names[x], names[z]),
                               {names[quad[0]], names[quad[1]], names[quad[2]], names[quad[3]]},
                               arith.to_double(derived)});
        changed = true;
      }
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!has(a, b)) continue;
      Cord cord(names[a], names[b]);
      auto original = distances.find(cord);
      // Input values are reported verbatim, not round-tripped through Number.
      trace.final.emplace(cord, original != distances.end() ? original->second
                                                            : arith.to_double(d(a, b)));
    }
  }
  return trace;
}

}  // namespace

bool ClosureTrace::complete() const {
  const std::size_t n = taxa.size();
  return final.size() == n * (n - 1) / 2;
}

CordSet ClosureTrace::missing() const {
  CordSet out;
  for (const auto& cord : all_cords(taxa)) {
    if (!final.contains(cord)) out.insert(out.end(), cord);
  }
  return out;
}

ClosureTrace closure(const PartialDistance& distances, const ClosureOptions& options) {
  return closure(distances, taxa_of(distances), options);
}

ClosureTrace closure(const PartialDistance& distances, const TaxonSet& taxa,
                     const ClosureOptions& options) {
  if (distances.empty()) throw InputError("closure needs at least one known distance");
  for (const auto& t : taxa_of(distances)) {
    if (!taxa.contains(t)) throw InputError("distance mentions taxon '" + t + "' outside the taxon set");
  }
  for (const auto& [cord, d] : distances) {
    if (!(d >= 0.0)) throw InputError("distances must be non-negative");
  }
  if (options.exact_rational) return run_closure(distances, taxa, ExactArithmetic{});
  return run_closure(distances, taxa, FloatArithmetic{options.tolerance});
}

std::string format_closure_trace(const ClosureTrace& trace) {
  std::string out;
  for (const auto& step : trace.steps) {
    const auto& [x, y, u, z] = step.quadruple;
    out += x + " " + z + " := d(" + x + "," + u + ")+d(" + y + "," + z + ")-d(" + y + "," + u +
           ") via (" + x + "," + y + "," + u + "," + z + ") = " + format_number(step.value) + "\n";
  }
  return out;
}

}  // namespace treelasso
