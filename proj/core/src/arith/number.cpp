#include "dreidel/arith/number.hpp"

#include <algorithm>

#include "dreidel/error.hpp"

namespace dreidel {
namespace {

long working_precision(const Number& lhs, const Number& rhs) {
  long p = 0;
  if (!lhs.is_exact()) p = lhs.approx().precision();
  if (!rhs.is_exact()) p = std::max(p, rhs.approx().precision());
  return p == 0 ? BigFloat::kDefaultPrecision : p;
}

template <class ExactOp, class ApproxOp>
Number combine(const Number& lhs, const Number& rhs, ExactOp exact_op, ApproxOp approx_op) {
  if (lhs.is_exact() && rhs.is_exact()) return exact_op(lhs.exact(), rhs.exact());
  const long p = working_precision(lhs, rhs);
  return approx_op(lhs.to_bigfloat(p), rhs.to_bigfloat(p));
}

}  // namespace

const Rational& Number::exact() const {
  if (!is_exact()) throw Error(ErrorCode::kInvalidArgument, "number is not exact");
  return std::get<Rational>(value_);
}

const BigFloat& Number::approx() const {
  if (is_exact()) throw Error(ErrorCode::kInvalidArgument, "number is exact");
  return std::get<BigFloat>(value_);
}

BigFloat Number::to_bigfloat(long precision_bits) const {
  if (is_exact()) return BigFloat(exact(), precision_bits);
  return approx();
}

double Number::to_double() const {
  return is_exact() ? exact().to_double() : approx().to_double();
}

std::string Number::to_string(int digits) const {
  return is_exact() ? exact().to_string() : approx().to_string(digits);
}

Number Number::abs() const {
  if (is_exact()) return exact().abs();
  return approx().abs();
}

int Number::sign() const { return is_exact() ? exact().sign() : approx().sign(); }

Number operator+(const Number& lhs, const Number& rhs) {
  return combine(
      lhs, rhs, [](const Rational& x, const Rational& y) { return Number(x + y); },
      [](const BigFloat& x, const BigFloat& y) { return Number(x + y); });
}

Number operator-(const Number& lhs, const Number& rhs) {
  return combine(
      lhs, rhs, [](const Rational& x, const Rational& y) { return Number(x - y); },
      [](const BigFloat& x, const BigFloat& y) { return Number(x - y); });
}

Number operator*(const Number& lhs, const Number& rhs) {
  return combine(
      lhs, rhs, [](const Rational& x, const Rational& y) { return Number(x * y); },
      [](const BigFloat& x, const BigFloat& y) { return Number(x * y); });
}

Number operator/(const Number& lhs, const Number& rhs) {
  return combine(
      lhs, rhs, [](const Rational& x, const Rational& y) { return Number(x / y); },
      [](const BigFloat& x, const BigFloat& y) { return Number(x / y); });
}

Number Number::operator-() const {
  if (is_exact()) return -exact();
  return -approx();
}

bool operator==(const Number& lhs, const Number& rhs) {
  if (lhs.is_exact() && rhs.is_exact()) return lhs.exact() == rhs.exact();
  const long p = working_precision(lhs, rhs);
  return lhs.to_bigfloat(p) == rhs.to_bigfloat(p);
}

std::partial_ordering operator<=>(const Number& lhs, const Number& rhs) {
  if (lhs.is_exact() && rhs.is_exact()) return lhs.exact() <=> rhs.exact();
  const long p = working_precision(lhs, rhs);
  return lhs.to_bigfloat(p) <=> rhs.to_bigfloat(p);
}

}  // namespace dreidel
