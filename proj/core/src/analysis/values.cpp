#include "dreidel/analysis/values.hpp"

#include "dreidel/error.hpp"

namespace dreidel {

GameValues::GameValues(HiprecOptions options) : solver_(std::move(options)) {}

const ReducedSolution& GameValues::line(int line_total) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = lines_.find(line_total); it != lines_.end()) return it->second;
  }
  ReducedSolution solved = reduced_solve_T(line_total, &solver_);
  std::lock_guard lock(mutex_);
  return lines_.try_emplace(line_total, std::move(solved)).first->second;
}

Rational GameValues::simplified_T(int a, int b) {
  if (a < 0 || b < 0) throw Error(ErrorCode::kInvalidArgument, "negative nut count");
  if (a == 0 || b == 0) return 0;
  return line(a + b).at(a);
}

Rational GameValues::simplified_D(const GameState& s) {
  if (!s.is_valid()) throw Error(ErrorCode::kInvalidArgument, "invalid state " + to_string(s));
  if (s.is_absorbing()) return 0;
  if (s.p == 2) return simplified_T(s.a, s.b);
  const TCombination c = expand_shin_chain(s.a, s.p, s.b);
  Rational total = c.constant;
  for (const auto& [xy, coeff] : c.terms) total += coeff * simplified_T(xy.first, xy.second);
  return total;
}

BigFloat GameValues::full_Q(int a, int b) {
  return solver_.expected_spins(Game::kFull, {a, 2, b}, SolveMode::kHighPrecision)
      .to_bigfloat(precision_bits());
}

Number GameValues::value(Game game, const GameState& s) {
  if (game == Game::kSimplified) return simplified_D(s);
  return solver_.expected_spins(Game::kFull, s, SolveMode::kHighPrecision);
}

BigFloat GameValues::error_bound(Game game, const GameState& s) {
  if (game == Game::kSimplified || s.is_absorbing()) return BigFloat(precision_bits());
  const auto table = solver_.table(Game::kFull, s.total(), SolveMode::kHighPrecision);
  return table->error_bound.value_or(BigFloat(precision_bits()));
}

}  // namespace dreidel
