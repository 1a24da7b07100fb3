#include "treelasso/cords.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <vector>

#include "detail/rooted.hpp"
#include "detail/text.hpp"
#include "treelasso/errors.hpp"
#include "treelasso/newick.hpp"

namespace treelasso {

Cord::Cord(Taxon a, Taxon b) {
  if (a == b) throw InputError("a cord needs two distinct taxa, got '" + a + "' twice");
  if (b < a) std::swap(a, b);
  first_ = std::move(a);
  second_ = std::move(b);
}

TaxonSet taxa_of(const CordSet& cords) {
  TaxonSet out;
  for (const auto& c : cords) {
    out.insert(c.first());
    out.insert(c.second());
  }
  return out;
}

TaxonSet taxa_of(const PartialDistance& distances) { return taxa_of(domain_of(distances)); }

CordSet domain_of(const PartialDistance& distances) {
  CordSet out;
  for (const auto& [cord, value] : distances) out.insert(out.end(), cord);
  return out;
}

CordSet all_cords(const TaxonSet& taxa) {
  CordSet out;
  for (auto i = taxa.begin(); i != taxa.end(); ++i) {
    for (auto j = std::next(i); j != taxa.end(); ++j) out.emplace(*i, *j);
  }
  return out;
}

namespace {

Cord parse_cord_fields(std::string_view a, std::string_view b, std::size_t line_no) {
  for (auto label : {a, b}) {
    if (!is_valid_taxon(label)) {
      throw ParseError("invalid taxon label '" + std::string(label) + "'", line_no, 0);
    }
  }
  if (a == b) throw ParseError("self-cord '" + std::string(a) + "'", line_no, 0);
  return Cord(std::string(a), std::string(b));
}

}  // namespace

PartialDistance parse_cord_distances(std::string_view text, const Tolerance& tolerance) {
  PartialDistance out;
  detail::for_each_record(text, [&](std::size_t line_no, const std::vector<std::string_view>& f) {
    if (f.size() != 3) {
      throw ParseError("expected 'taxonA<TAB>taxonB<TAB>distance', found " +
                           std::to_string(f.size()) + " field(s)",
                       line_no, 0);
    }
    Cord cord = parse_cord_fields(f[0], f[1], line_no);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(f[2].data(), f[2].data() + f[2].size(), value);
    if (ec != std::errc{} || ptr != f[2].data() + f[2].size() || !std::isfinite(value)) {
      throw ParseError("malformed distance '" + std::string(f[2]) + "'", line_no, 0);
    }
    if (value < 0.0) throw ParseError("negative distance", line_no, 0);
    auto [it, inserted] = out.emplace(cord, value);
    if (!inserted && !tolerance.equal(it->second, value)) {
      throw ParseError("conflicting duplicate for cord " + cord.first() + " " + cord.second() +
                           ": " + format_number(it->second) + " vs " + format_number(value),
                       line_no, 0);
    }
  });
  return out;
}

std::string format_cord_distances(const PartialDistance& distances) {
  std::string out;
  for (const auto& [cord, value] : distances) {
    out += cord.first() + '\t' + cord.second() + '\t' + format_number(value) + '\n';
  }
  return out;
}

CordSet parse_cord_set(std::string_view text) {
  CordSet out;
  detail::for_each_record(text, [&](std::size_t line_no, const std::vector<std::string_view>& f) {
    if (f.size() != 2 && f.size() != 3) {
      throw ParseError("expected 'taxonA<TAB>taxonB', found " + std::to_string(f.size()) +
                           " field(s)",
                       line_no, 0);
    }
    out.insert(parse_cord_fields(f[0], f[1], line_no));
  });
  return out;
}

std::string format_cord_set(const CordSet& cords) {
  std::string out;
  for (const auto& cord : cords) out += cord.first() + '\t' + cord.second() + '\n';
  return out;
}

PartialDistance induced_distance(const XTree& tree, const CordSet& cords) {
  PartialDistance out;
  if (cords.empty()) return out;
  const auto dist = detail::leaf_distances(tree);
  for (const auto& cord : cords) {
    out.emplace_hint(out.end(), cord,
                     dist[tree.taxon_index(cord.first())][tree.taxon_index(cord.second())]);
  }
  return out;
}

GraphChecks graph_necessary_checks(const CordSet& cords, const TaxonSet& taxa) {
  std::map<std::string_view, std::size_t> index;
  for (const auto& t : taxa) index.emplace(t, index.size());
  std::vector<std::vector<std::size_t>> adjacency(taxa.size());
  for (const auto& cord : cords) {
    auto a = index.find(cord.first());
    auto b = index.find(cord.second());
    if (a == index.end() || b == index.end()) {
      throw InputError("cord " + cord.first() + " " + cord.second() + " leaves the taxon set");
    }
    adjacency[a->second].push_back(b->second);
    adjacency[b->second].push_back(a->second);
  }

  // Two-colour each component; an odd cycle shows up as a same-colour edge.
  std::vector<int> colour(taxa.size(), -1);
  std::size_t components = 0;
  bool every_component_odd = true;
  for (std::size_t start = 0; start < taxa.size(); ++start) {
    if (colour[start] != -1) continue;
    ++components;
    bool odd_cycle = false;
    std::vector<std::size_t> stack{start};
    colour[start] = 0;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : adjacency[v]) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          stack.push_back(w);
        } else if (colour[w] == colour[v]) {
          odd_cycle = true;
        }
      }
    }
    every_component_odd = every_component_odd && odd_cycle;
  }
  return {components <= 1, every_component_odd};
}

}  // namespace treelasso
