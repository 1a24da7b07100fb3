#pragma once

#include <string>
#include <string_view>

#include "treelasso/xtree.hpp"

namespace treelasso {

/// Parses a ';'-terminated Newick string into an XTree.
///
/// Leaf labels are either bare ([A-Za-z0-9_.-]+ followed by optional primes)
/// or single-quoted with '' as the escaped quote. Branch lengths are optional
/// and default to 1. The root is not a vertex of the result: a root of degree
/// two disappears and its two branch lengths add up. Square-bracket comments
/// and whitespace between tokens are skipped. Interior node labels are
/// rejected.
///
/// Throws ParseError (with line and column) for malformed text and InputError
/// for duplicate labels, negative lengths or fewer than three leaves.
XTree parse_newick(std::string_view text);

/// Canonical Newick: rooted at the interior vertex next to the smallest
/// taxon, children sorted by their smallest descendant taxon, lengths written
/// in shortest round-trip form. Equivalent trees with equal weights give
/// identical strings.
std::string write_newick(const XTree& tree);

/// Shortest decimal that parses back to exactly `value`.
std::string format_number(double value);

}  // namespace treelasso
