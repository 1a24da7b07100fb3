#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "treelasso/tolerance.hpp"

namespace treelasso::cli {

struct SimulationConfig {
  std::size_t n = 8;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  double weight_lo = 0.1;
  double weight_hi = 1.0;
  double dropout = 0.0;
  std::size_t extra = 0;
  bool drop_cover = false;
  std::size_t threads = 1;
  Tolerance tolerance{};
};

enum class TrialOutcome { success, incomplete, inconsistent, wrong_tree };

struct TrialResult {
  TrialOutcome outcome = TrialOutcome::success;
  std::size_t cords = 0;
  std::size_t closure_steps = 0;
  double seconds = 0.0;
};

/// One independent trial: random tree, random stable triplet cover, optional
/// extra cords and dropout, then reconstruction. Seeded from (seed, index).
TrialResult run_trial(const SimulationConfig& config, std::size_t index);

/// All trials, spread over config.threads workers; results are in trial order.
std::vector<TrialResult> run_simulation(const SimulationConfig& config);

}  // namespace treelasso::cli
