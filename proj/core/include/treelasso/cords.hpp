#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "treelasso/tolerance.hpp"
#include "treelasso/xtree.hpp"

namespace treelasso {

/// Unordered pair of distinct taxa, stored with first() < second().
class Cord {
 public:
  /// Throws InputError when a == b.
  Cord(Taxon a, Taxon b);

  const Taxon& first() const noexcept { return first_; }
  const Taxon& second() const noexcept { return second_; }
  bool contains(std::string_view taxon) const { return first_ == taxon || second_ == taxon; }

  friend auto operator<=>(const Cord&, const Cord&) = default;

 private:
  Taxon first_;
  Taxon second_;
};

using CordSet = std::set<Cord>;
/// Distances known on a set of cords: the restriction of a metric to them.
using PartialDistance = std::map<Cord, double>;

TaxonSet taxa_of(const CordSet& cords);
TaxonSet taxa_of(const PartialDistance& distances);
CordSet domain_of(const PartialDistance& distances);
/// Every cord over `taxa`.
CordSet all_cords(const TaxonSet& taxa);

/// Tab-separated "taxonA<TAB>taxonB<TAB>distance" lines. Blank lines and lines
/// starting with '#' are skipped. A repeated cord must repeat its value within
/// the tolerance and is then kept once.
///
/// Throws ParseError (line number) for malformed lines, self-cords, invalid
/// labels, negative distances and conflicting duplicates.
PartialDistance parse_cord_distances(std::string_view text, const Tolerance& tolerance = {});
std::string format_cord_distances(const PartialDistance& distances);

/// Cord lists, one "taxonA<TAB>taxonB" per line; a third column (a distance)
/// is accepted and ignored so distance files double as cord files.
CordSet parse_cord_set(std::string_view text);
std::string format_cord_set(const CordSet& cords);

/// Tree distances on each cord.
PartialDistance induced_distance(const XTree& tree, const CordSet& cords);

struct GraphChecks {
  bool connected;
  bool all_components_non_bipartite;
};

/// Necessary conditions for a strong lasso on the graph (taxa, cords): the
/// graph must be connected and no component may be bipartite. Taxa without
/// cords count as isolated vertices.
GraphChecks graph_necessary_checks(const CordSet& cords, const TaxonSet& taxa);

}  // namespace treelasso
