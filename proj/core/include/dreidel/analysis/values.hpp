#pragma once

#include <map>
#include <mutex>

#include "dreidel/arith/number.hpp"
#include "dreidel/chain/spin_table.hpp"
#include "dreidel/keyeq/keyeq.hpp"

namespace dreidel {

/// Memoizing access to the quantities the analysis layer works with.
///
/// Simplified-game values come from the per-line Key system, which is far
/// cheaper than a full chain solve for large totals: T(a, b) directly, and
/// D(a, p, b) through the shin-chain expansion onto the line a + p + b - 2.
/// Full-game values come from high-precision chain solves.
class GameValues {
 public:
  explicit GameValues(HiprecOptions options = {});

  /// Exact T(a, b) = D(a, 2, b) of the simplified game; 0 on the boundary.
  Rational simplified_T(int a, int b);
  /// Exact D(a, p, b) of the simplified game.
  Rational simplified_D(const GameState& s);
  /// Q(a, b) = Dr(a, 2, b) of the full game, high precision.
  BigFloat full_Q(int a, int b);
  /// D for either game: exact for the simplified game, hiprec for the full.
  Number value(Game game, const GameState& s);
  /// Error bound attached to value(game, s); zero for exact values.
  BigFloat error_bound(Game game, const GameState& s);

  SpinSolver& solver() { return solver_; }
  long precision_bits() const { return solver_.options().precision_bits; }

 private:
  const ReducedSolution& line(int line_total);

  SpinSolver solver_;
  std::mutex mutex_;
  std::map<int, ReducedSolution> lines_;
};

}  // namespace dreidel
