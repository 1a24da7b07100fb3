#include "simulate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "treelasso/cover.hpp"
#include "treelasso/errors.hpp"
#include "treelasso/reconstruct.hpp"
#include "treelasso/tree_ops.hpp"

namespace treelasso::cli {
namespace {

std::uint64_t trial_seed(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::array<std::uint32_t, 2> words{};
  seq.generate(words.begin(), words.end());
  return (std::uint64_t{words[0]} << 32) | words[1];
}

}  // namespace

TrialResult run_trial(const SimulationConfig& config, std::size_t index) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t seed = trial_seed(config.seed, index);
  std::mt19937_64 rng(seed);
  XTree truth = random_tree(config.n, seed, config.weight_lo, config.weight_hi);

  auto order = truth.taxa();
  std::shuffle(order.begin(), order.end(), rng);
  Transversal f;
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: f = min_order_transversal(truth, order); break;
    case 1: f = closest_leaf_transversal(truth, LeafPreference::closest, order); break;
    default: f = closest_leaf_transversal(truth, LeafPreference::furthest, order); break;
  }
  const CordSet cover = triplet_cover(truth, f);

  std::vector<Cord> others;
  for (const auto& c : all_cords(truth.taxon_set())) {
    if (!cover.contains(c)) others.push_back(c);
  }
  std::shuffle(others.begin(), others.end(), rng);
  if (others.size() > config.extra) others.erase(others.begin() + static_cast<std::ptrdiff_t>(config.extra), others.end());

  std::bernoulli_distribution drop(config.dropout);
  CordSet cords;
  for (const auto& c : cover) {
    if (!(config.drop_cover && drop(rng))) cords.insert(c);
  }
  for (const auto& c : others) {
    if (!drop(rng)) cords.insert(c);
  }

  TrialResult result;
  result.cords = cords.size();
  ReconstructionOptions options;
  options.closure.tolerance = config.tolerance;
  try {
    if (cords.empty()) {
      result.outcome = TrialOutcome::incomplete;
    } else {
      auto r = reconstruct(induced_distance(truth, cords), truth.taxon_set(), options);
      result.closure_steps = r.closure.steps.size();
      if (!r.complete()) {
        result.outcome = TrialOutcome::incomplete;
      } else if (!is_equivalent(*r.tree, truth) || max_weight_difference(*r.tree, truth) > 1e-6) {
        result.outcome = TrialOutcome::wrong_tree;
      }
    }
  } catch (const InconsistencyError&) {
    result.outcome = TrialOutcome::inconsistent;
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<TrialResult> run_simulation(const SimulationConfig& config) {
  std::vector<TrialResult> results(config.trials);
  const std::size_t workers = std::max<std::size_t>(1, std::min(config.threads, config.trials));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < config.trials; i = next++) results[i] = run_trial(config, i);
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace treelasso::cli
