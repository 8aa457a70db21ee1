#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "dreidel/arith/bigfloat.hpp"
#include "dreidel/games/gambler.hpp"
#include "dreidel/games/rules.hpp"

namespace dreidel {

struct SimOptions {
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::uint64_t spin_cap = 100'000'000;
};

struct SimResult {
  std::uint64_t trials = 0;
  BigFloat mean;
  BigFloat standard_error;  // sample standard deviation / sqrt(trials)
  std::map<std::uint64_t, std::uint64_t> histogram;  // game length -> count
  std::uint64_t seed = 0;
};

/// Seed of the generator used for trial `index`: SplitMix64 applied to
/// seed + (index + 1) * 0x9E3779B97F4A7C15. Each trial owns an independent
/// std::mt19937_64, so any partition of the trial range reproduces a serial
/// run exactly.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

/// Plays `trials` games from `start`, counting one spin per transition. A
/// branch is selected by comparing one 64-bit draw against the cumulative
/// branch probabilities scaled to 2^64. Throws kSpinCapExceeded if one game
/// runs past options.spin_cap.
SimResult simulate(Game game, const GameState& start, const SimOptions& options);
SimResult simulate_gambler(const GamblerParams& params, const SimOptions& options);

/// {"trials":..., "mean":"...", "stderr":"...", "seed":..., "histogram":{...}}
std::string to_json(const SimResult& result, int digits = 30);

}  // namespace dreidel
