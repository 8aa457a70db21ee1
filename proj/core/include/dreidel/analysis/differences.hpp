#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "dreidel/analysis/values.hpp"
#include "dreidel/arith/number.hpp"
#include "dreidel/chain/state.hpp"

namespace dreidel {

enum class DifferenceDirection {
  kDeltaA,   // D(a+1,p,b) - D(a,p,b)
  kDeltaB,   // D(a,p,b+1) - D(a,p,b)
  kSecondA,  // D(a+2,p,b) - 2D(a+1,p,b) + D(a,p,b)
  kSecondB,  // D(a,p,b+2) - 2D(a,p,b+1) + D(a,p,b)
  kPot,      // h_{a,b}(p) = D(a,p+1,b) - D(a,p,b)
};

std::string_view to_string(DifferenceDirection d);

/// entries[k] is the difference based at `base` shifted k steps along the
/// direction's own axis.
struct DifferenceTable {
  DifferenceDirection direction = DifferenceDirection::kDeltaA;
  GameState base;
  std::vector<Number> entries;
  /// Present when the inputs were approximate: sum of |weights| times the
  /// input bound (2x for first differences, 4x for second).
  std::optional<BigFloat> error_bound;
};

using ValueFn = std::function<Number(const GameState&)>;

DifferenceTable difference_table(const ValueFn& value, DifferenceDirection direction,
                                 const GameState& base, int count,
                                 const std::optional<BigFloat>& value_error = std::nullopt);

/// Convenience over GameValues (exact for the simplified game, hiprec for the
/// full game).
DifferenceTable difference_table(GameValues& values, Game game, DifferenceDirection direction,
                                 const GameState& base, int count);

}  // namespace dreidel
