#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treelasso/cords.hpp"
#include "treelasso/xtree.hpp"

namespace treelasso {

/// Cord ab added with pivots (x, y): the quartet {a,b,x,y} resolves as
/// ax||yb and the other five cords of the quartet were already known.
struct ShellingStep {
  Cord cord;
  std::pair<Taxon, Taxon> pivots;
};

using ShellingTrace = std::vector<ShellingStep>;

struct ShellingResult {
  bool shellable = false;
  ShellingTrace trace;
  /// Cords still missing at the fixpoint; empty iff shellable.
  CordSet unreachable;

  explicit operator bool() const noexcept { return shellable; }
};

struct ShellingOptions {
  /// Visit candidate cords in a seeded random order instead of
  /// lexicographically. The verdict does not depend on it.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Greedy saturation. A cord that admits pivots keeps admitting them as more
/// cords become known, so the set reached by adding admissible cords in any
/// order until none is left is always the same; L is shellable iff that set
/// is every cord. Quartets are read from the topology only.
///
/// The tree must be fully resolved and the cords must lie over its taxa.
ShellingResult is_shellable(const XTree& tree, const CordSet& cords,
                            const ShellingOptions& options = {});

struct ShellingValidation {
  bool valid = true;
  std::size_t failed_step = 0;  // index into the trace when !valid
  std::string reason;

  explicit operator bool() const noexcept { return valid; }
};

/// Replays a trace against the tree. The pivot pair is unordered: either
/// ax||yb or ay||xb is accepted. After the last step every cord must be known.
ShellingValidation validate_shelling(const XTree& tree, const CordSet& cords,
                                     const ShellingTrace& trace);

/// One line per step: "a b | pivots x y".
std::string format_shelling_trace(const ShellingTrace& trace);

}  // namespace treelasso
