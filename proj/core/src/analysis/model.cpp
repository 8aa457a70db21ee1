#include "dreidel/analysis/model.hpp"

#include "dreidel/error.hpp"

namespace dreidel {

ModelCoefficients simplified_model(const Number& c2, const Number& c0) {
  ModelCoefficients m;
  m.game = Game::kSimplified;
  m.c3 = Rational(12, 19);
  m.c2 = c2;
  m.c1 = c2 + Rational(2, 19);
  m.c0 = c0;
  m.s2 = Rational(4, 19);
  m.s1 = Rational(8, 19);
  m.s0 = c2 - Rational(18, 19);
  return m;
}

ModelCoefficients known_simplified_model(long precision_bits) {
  return simplified_model(BigFloat::parse("-0.304636562751640396971893222635", precision_bits),
                          BigFloat::parse("2.13102617218341081870452144156", precision_bits));
}

ModelCoefficients dreidel_conjecture_model(long precision_bits) {
  ModelCoefficients m;
  m.game = Game::kFull;
  m.c3 = BigFloat::parse("2.21814151862618181904832628843", precision_bits);
  m.c2 = BigFloat::parse("-1.09709667033405910669478639669", precision_bits);
  m.c1 = BigFloat::parse("-0.447079544643588135688652268182", precision_bits);
  m.c0 = BigFloat::parse("2.83880783734231869675987135868", precision_bits);
  return m;
}

Number eval_model(const ModelCoefficients& model, int a, int b, std::optional<int> p) {
  const Number na(a);
  const Number nb(b);
  Number value = model.c3 * na * nb + model.c2 * na + model.c1 * nb + model.c0;
  if (!p || *p == 2) return value;
  if (!model.has_pot_terms()) {
    throw Error(ErrorCode::kMissingValue, "model has no pot-direction coefficients");
  }
  return value + Number(*p - 2) * (*model.s2 * na + *model.s1 * nb + *model.s0);
}

}  // namespace dreidel
