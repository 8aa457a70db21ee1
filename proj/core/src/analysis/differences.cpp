#include "dreidel/analysis/differences.hpp"

#include "dreidel/error.hpp"

namespace dreidel {
namespace {

GameState shifted(const GameState& s, DifferenceDirection d, int k) {
  switch (d) {
    case DifferenceDirection::kDeltaA:
    case DifferenceDirection::kSecondA: return {s.a + k, s.p, s.b};
    case DifferenceDirection::kDeltaB:
    case DifferenceDirection::kSecondB: return {s.a, s.p, s.b + k};
    case DifferenceDirection::kPot: return {s.a, s.p + k, s.b};
  }
  return s;
}

bool is_second(DifferenceDirection d) {
  return d == DifferenceDirection::kSecondA || d == DifferenceDirection::kSecondB;
}

}  // namespace

std::string_view to_string(DifferenceDirection d) {
  switch (d) {
    case DifferenceDirection::kDeltaA: return "delta_a";
    case DifferenceDirection::kDeltaB: return "delta_b";
    case DifferenceDirection::kSecondA: return "delta2_a";
    case DifferenceDirection::kSecondB: return "delta2_b";
    case DifferenceDirection::kPot: return "h";
  }
  return "?";
}

DifferenceTable difference_table(const ValueFn& value, DifferenceDirection direction,
                                 const GameState& base, int count,
                                 const std::optional<BigFloat>& value_error) {
  if (count < 0) throw Error(ErrorCode::kInvalidArgument, "count must be nonnegative");
  if (!base.is_valid()) throw Error(ErrorCode::kInvalidArgument, "invalid base state");
  DifferenceTable out;
  out.direction = direction;
  out.base = base;

  const int span = is_second(direction) ? 2 : 1;
  std::vector<Number> raw;
  raw.reserve(static_cast<std::size_t>(count + span));
  for (int k = 0; k < count + span; ++k) raw.push_back(value(shifted(base, direction, k)));

  for (int k = 0; k < count; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (span == 1) {
      out.entries.push_back(raw[i + 1] - raw[i]);
    } else {
      out.entries.push_back(raw[i + 2] - Number(2) * raw[i + 1] + raw[i]);
    }
  }
  if (value_error) out.error_bound = *value_error * BigFloat::from_integer(span == 1 ? 2 : 4);
  return out;
}

DifferenceTable difference_table(GameValues& values, Game game, DifferenceDirection direction,
                                 const GameState& base, int count) {
  std::optional<BigFloat> error;
  if (game == Game::kFull) {
    BigFloat worst(values.precision_bits());
    const int span = is_second(direction) ? 2 : 1;
    for (int k = 0; k < count + span; ++k) {
      worst = max(worst, values.error_bound(game, shifted(base, direction, k)));
    }
    error = worst;
  }
  return difference_table([&](const GameState& s) { return values.value(game, s); }, direction,
                          base, count, error);
}

}  // namespace dreidel
