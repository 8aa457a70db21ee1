#pragma once

#include <string>
#include <variant>

#include "dreidel/arith/bigfloat.hpp"
#include "dreidel/arith/rational.hpp"

namespace dreidel {

/// A value that is either exact or carried at finite binary precision.
/// Mixed arithmetic promotes to BigFloat at the BigFloat operand's precision.
class Number {
 public:
  Number() : value_(Rational(0)) {}
  Number(Rational value) : value_(std::move(value)) {}  // NOLINT(runtime/explicit)
  Number(BigFloat value) : value_(std::move(value)) {}  // NOLINT(runtime/explicit)
  template <std::integral I>
  Number(I value) : value_(Rational(value)) {}  // NOLINT(runtime/explicit)

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  const Rational& exact() const;
  const BigFloat& approx() const;

  /// Converts to BigFloat; exact values are rounded once at `precision_bits`,
  /// approximate values keep their own precision.
  BigFloat to_bigfloat(long precision_bits = BigFloat::kDefaultPrecision) const;
  double to_double() const;

  /// "num/den" for exact values, `digits` significant digits otherwise.
  std::string to_string(int digits = 30) const;

  Number abs() const;
  int sign() const;

  friend Number operator+(const Number& lhs, const Number& rhs);
  friend Number operator-(const Number& lhs, const Number& rhs);
  friend Number operator*(const Number& lhs, const Number& rhs);
  friend Number operator/(const Number& lhs, const Number& rhs);
  Number operator-() const;

  /// Exact values compare exactly; otherwise both sides go through BigFloat.
  friend bool operator==(const Number& lhs, const Number& rhs);
  friend std::partial_ordering operator<=>(const Number& lhs, const Number& rhs);

 private:
  std::variant<Rational, BigFloat> value_;
};

}  // namespace dreidel
