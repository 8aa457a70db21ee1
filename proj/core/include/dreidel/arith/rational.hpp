#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace dreidel {

/// Arbitrary-precision fraction kept in canonical form (positive denominator,
/// numerator and denominator coprime) after every operation. Division by
/// zero throws Error{kDivisionByZero}.
///
/// Serialized as "num/den", or just "num" when the value is an integer.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(to_mpz(value)) {}  // NOLINT(runtime/explicit)

  Rational(std::int64_t numerator, std::int64_t denominator);
  Rational(mpz_class numerator, mpz_class denominator);
  explicit Rational(mpq_class value);

  /// Parses "n", "-n", "n/d". Whitespace is not accepted.
  static Rational parse(std::string_view text);

  /// 2^exponent for any integer exponent.
  static Rational power_of_two(long exponent);

  const mpq_class& get() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  Rational inverse() const;
  double to_double() const { return value_.get_d(); }
  std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  template <std::integral I>
  static mpz_class to_mpz(I value) {
    if constexpr (std::is_signed_v<I>) {
      return mpz_class(static_cast<long>(value));
    } else {
      return mpz_class(static_cast<unsigned long>(value));
    }
  }

  mpq_class value_;
};

}  // namespace dreidel
