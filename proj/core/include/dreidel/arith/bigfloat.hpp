#pragma once

#include <mpfr.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "dreidel/arith/rational.hpp"

namespace dreidel {

/// Binary floating-point number at a per-value precision (MPFR backed).
///
/// Binary operations round to the larger of the operand precisions, to
/// nearest. Conversion from Rational is correctly rounded.
class BigFloat {
 public:
  static constexpr long kDefaultPrecision = 256;
  static constexpr long kMinPrecision = 64;

  /// Zero at the given precision.
  explicit BigFloat(long precision_bits = kDefaultPrecision);
  BigFloat(const Rational& value, long precision_bits = kDefaultPrecision);
  BigFloat(double value, long precision_bits = kDefaultPrecision);

  /// Exact integer value rounded to the given precision.
  static BigFloat from_integer(long value, long precision_bits = kDefaultPrecision);

  /// Parses a decimal literal ("1.5", "-2e-30", "33") at the given precision.
  static BigFloat parse(std::string_view text, long precision_bits = kDefaultPrecision);

  /// 10^exponent, correctly rounded.
  static BigFloat power_of_ten(long exponent, long precision_bits = kDefaultPrecision);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
  /// Rounds in place to a new precision.
  void set_precision(long precision_bits);

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }

  BigFloat abs() const;
  BigFloat sqrt() const;
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Decimal rendering with `digits` significant digits, round to nearest.
  /// Positional notation for moderate exponents, scientific otherwise.
  std::string to_string(int digits) const;
  /// Fixed-point rendering with exactly `decimals` digits after the point.
  std::string to_fixed(int decimals) const;

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(const BigFloat& lhs, const BigFloat& rhs);
  friend BigFloat operator-(const BigFloat& lhs, const BigFloat& rhs);
  friend BigFloat operator*(const BigFloat& lhs, const BigFloat& rhs);
  friend BigFloat operator/(const BigFloat& lhs, const BigFloat& rhs);
  BigFloat operator-() const;

  friend bool operator==(const BigFloat& lhs, const BigFloat& rhs) {
    return mpfr_equal_p(lhs.value_, rhs.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigFloat& lhs, const BigFloat& rhs);

  friend std::ostream& operator<<(std::ostream& os, const BigFloat& x) {
    return os << x.to_string(30);
  }

  mpfr_srcptr raw() const { return value_; }
  mpfr_ptr raw() { return value_; }

 private:
  mpfr_t value_;
};

BigFloat max(const BigFloat& lhs, const BigFloat& rhs);

}  // namespace dreidel
