#include "dreidel/analysis/report.hpp"

#include "dreidel/error.hpp"

namespace dreidel {

ErrorProfile error_profile(GameValues& values, Game game, const ModelCoefficients& model,
                           const GridBounds& range) {
  if (range.empty()) throw Error(ErrorCode::kEmptyDomain, "empty error-profile range");
  const long prec = values.precision_bits();
  ErrorProfile out;
  for (int a = range.a_min; a <= range.a_max; ++a) {
    for (int b = range.b_min; b <= range.b_max; ++b) {
      const Number eps = values.value(game, {a, 2, b}) - eval_model(model, a, b);
      out.epsilon.emplace(std::pair{a, b}, eps.to_bigfloat(prec));
    }
  }

  const BigFloat low(kDecayBandLow, prec);
  const BigFloat high(kDecayBandHigh, prec);
  out.all_in_band = true;
  for (int k = std::max(range.a_min, range.b_min); k + 1 <= std::min(range.a_max, range.b_max); ++k) {
    const BigFloat& here = out.epsilon.at({k, k});
    const BigFloat& next = out.epsilon.at({k + 1, k + 1});
    DecayRatio r;
    r.k = k;
    r.ratio = here.is_zero() ? BigFloat(prec) : next.abs() / here.abs();
    r.in_band = !here.is_zero() && r.ratio >= low && r.ratio <= high;
    out.all_in_band = out.all_in_band && r.in_band;
    out.diagonal.push_back(std::move(r));
  }
  if (out.diagonal.empty()) out.all_in_band = false;
  return out;
}

BigFloat duration_report(GameValues& values, int nuts, const BigFloat& seconds_per_spin) {
  if (nuts < 2) throw Error(ErrorCode::kInvalidArgument, "each player needs at least 2 nuts");
  const BigFloat spins = values.full_Q(nuts - 1, nuts - 1);
  return spins * seconds_per_spin / BigFloat::from_integer(60, values.precision_bits());
}

}  // namespace dreidel
