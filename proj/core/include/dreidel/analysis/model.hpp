#pragma once

#include <optional>
#include <string>

#include "dreidel/arith/number.hpp"
#include "dreidel/games/rules.hpp"

namespace dreidel {

/// c3*ab + c2*a + c1*b + c0, optionally extended off the pot-2 plane by
/// (p - 2)(s2*a + s1*b + s0).
struct ModelCoefficients {
  std::optional<Game> game;
  Number c3;
  Number c2;
  Number c1;
  Number c0;
  std::optional<Number> s2;
  std::optional<Number> s1;
  std::optional<Number> s0;

  bool has_pot_terms() const { return s2 && s1 && s0; }
};

/// Simplified-game model with the exact relations c3 = 12/19,
/// c1 = c2 + 2/19, s2 = 4/19, s1 = 8/19, s0 = c2 - 18/19.
ModelCoefficients simplified_model(const Number& c2, const Number& c0);

/// Simplified model at the 30-digit least-squares constants
/// c2 = -0.304636562751640396971893222635, c0 = 2.13102617218341081870452144156.
ModelCoefficients known_simplified_model(long precision_bits = BigFloat::kDefaultPrecision);

/// Full-game bilinear model at the conjectured 30-digit coefficients.
ModelCoefficients dreidel_conjecture_model(long precision_bits = BigFloat::kDefaultPrecision);

/// Evaluates the model at (a, b), or at (a, p, b) when p is given. At p = 2
/// the result is exactly the (a, b) evaluation. Throws kMissingValue when p
/// is given and the pot terms are absent.
Number eval_model(const ModelCoefficients& model, int a, int b, std::optional<int> p = std::nullopt);

}  // namespace dreidel
