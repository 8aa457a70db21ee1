#include "dreidel/games/simulate.hpp"

#include <random>
#include <vector>

#include "json.hpp"

#include "dreidel/error.hpp"

namespace dreidel {
namespace {

// Cumulative branch thresholds in units of 2^-64; the last branch takes the
// remainder so rounding never leaves a gap.
template <class State>
struct CompiledLaw {
  std::vector<std::uint64_t> thresholds;
  std::vector<std::optional<State>> successors;
};

template <class State>
CompiledLaw<State> compile(const TransitionLaw<State>& law) {
  if (law.total_probability() != Rational(1)) {
    throw Error(ErrorCode::kInvalidArgument, "branch probabilities do not sum to 1");
  }
  CompiledLaw<State> out;
  const mpz_class two64 = mpz_class(1) << 64;
  Rational cumulative = 0;
  for (const auto& br : law.branches) {
    cumulative += br.probability;
    mpz_class scaled = cumulative.numerator() * two64 / cumulative.denominator();
    const std::uint64_t t = scaled >= two64 ? UINT64_MAX : std::stoull(scaled.get_str());
    out.thresholds.push_back(t);
    out.successors.push_back(br.successor);
  }
  out.thresholds.back() = UINT64_MAX;
  return out;
}

template <class State, class Rules>
SimResult run(const State& start, Rules&& rules, const SimOptions& options) {
  if (options.trials < 1) throw Error(ErrorCode::kInvalidArgument, "need at least one trial");
  std::map<State, CompiledLaw<State>> laws;
  auto law_for = [&](const State& s) -> const CompiledLaw<State>& {
    auto it = laws.find(s);
    if (it == laws.end()) it = laws.emplace(s, compile(rules(s))).first;
    return it->second;
  };
  law_for(start);  // rejects absorbing starts

  SimResult result;
  result.trials = options.trials;
  result.seed = options.seed;
  for (std::uint64_t trial = 0; trial < options.trials; ++trial) {
    std::mt19937_64 rng(trial_seed(options.seed, trial));
    State s = start;
    std::uint64_t spins = 0;
    while (true) {
      if (spins >= options.spin_cap) {
        throw Error(ErrorCode::kSpinCapExceeded,
                    "trial " + std::to_string(trial) + " exceeded " +
                        std::to_string(options.spin_cap) + " spins");
      }
      const auto& law = law_for(s);
      const std::uint64_t draw = rng();
      std::size_t k = 0;
      while (draw >= law.thresholds[k] && k + 1 < law.thresholds.size()) ++k;
      ++spins;
      if (!law.successors[k]) break;
      s = *law.successors[k];
    }
    ++result.histogram[spins];
  }

  // Exact moments from the histogram, rounded once.
  Rational sum = 0;
  Rational sum_sq = 0;
  for (const auto& [len, count] : result.histogram) {
    const Rational l(len);
    sum += l * Rational(count);
    sum_sq += l * l * Rational(count);
  }
  const Rational n(options.trials);
  const Rational mean = sum / n;
  result.mean = BigFloat(mean);
  if (options.trials > 1) {
    const Rational variance = (sum_sq - n * mean * mean) / (n - Rational(1));
    result.standard_error = (BigFloat(variance) / BigFloat(n)).sqrt();
  }
  return result;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SimResult simulate(Game game, const GameState& start, const SimOptions& options) {
  return run<GameState>(
      start, [game](const GameState& s) { return transitions(game, s); }, options);
}

SimResult simulate_gambler(const GamblerParams& params, const SimOptions& options) {
  params.validate();
  return run<int>(
      params.start, [&params](int a) { return gambler_transitions(a, params); }, options);
}

std::string to_json(const SimResult& result, int digits) {
  nlohmann::ordered_json j;
  j["trials"] = result.trials;
  j["mean"] = result.mean.to_string(digits);
  j["stderr"] = result.standard_error.to_string(digits);
  j["seed"] = result.seed;
  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for (const auto& [len, count] : result.histogram) hist[std::to_string(len)] = count;
  j["histogram"] = hist;
  return j.dump();
}

}  // namespace dreidel
