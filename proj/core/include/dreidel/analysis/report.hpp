#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dreidel/analysis/fit.hpp"
#include "dreidel/analysis/model.hpp"
#include "dreidel/analysis/values.hpp"

namespace dreidel {

struct DecayRatio {
  int k = 0;
  BigFloat ratio;  // |eps(k+1, k+1)| / |eps(k, k)|
  bool in_band = false;
};

struct ErrorProfile {
  std::map<std::pair<int, int>, BigFloat> epsilon;  // value - model at pot 2
  std::vector<DecayRatio> diagonal;
  bool all_in_band = false;
};

/// Nominal quarter-rate decay is accepted anywhere in [1/8, 1/2].
inline const Rational kDecayBandLow(1, 8);
inline const Rational kDecayBandHigh(1, 2);

/// eps(a, b) = T(a, b) - model(a, b) (or the full-game analogue) over the
/// grid, plus diagonal decay ratios for every k with (k, k) and
/// (k+1, k+1) both on the grid.
ErrorProfile error_profile(GameValues& values, Game game, const ModelCoefficients& model,
                           const GridBounds& range);

/// Minutes for a full game where each player starts with `nuts` nuts and
/// antes one: Q(nuts-1, nuts-1) * seconds_per_spin / 60.
BigFloat duration_report(GameValues& values, int nuts, const BigFloat& seconds_per_spin);

}  // namespace dreidel
