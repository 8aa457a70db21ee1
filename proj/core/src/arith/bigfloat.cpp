#include "dreidel/arith/bigfloat.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

#include "dreidel/error.hpp"

namespace dreidel {
namespace {

mpfr_prec_t checked_precision(long bits) {
  if (bits < BigFloat::kMinPrecision) {
    throw Error(ErrorCode::kInvalidArgument,
                "precision must be at least " + std::to_string(BigFloat::kMinPrecision) + " bits");
  }
  return static_cast<mpfr_prec_t>(bits);
}

long result_precision(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

BigFloat::BigFloat(long precision_bits) {
  mpfr_init2(value_, checked_precision(precision_bits));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const Rational& value, long precision_bits) {
  mpfr_init2(value_, checked_precision(precision_bits));
  mpfr_set_q(value_, value.get().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(double value, long precision_bits) {
  mpfr_init2(value_, checked_precision(precision_bits));
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat BigFloat::from_integer(long value, long precision_bits) {
  BigFloat x(precision_bits);
  mpfr_set_si(x.value_, value, MPFR_RNDN);
  return x;
}

BigFloat BigFloat::parse(std::string_view text, long precision_bits) {
  BigFloat x(precision_bits);
  const std::string s(text);
  if (s.empty() || mpfr_set_str(x.value_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw Error(ErrorCode::kParse, "not a decimal literal: '" + s + "'");
  }
  return x;
}

BigFloat BigFloat::power_of_ten(long exponent, long precision_bits) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  const Rational exact = exponent >= 0 ? Rational(p, mpz_class(1)) : Rational(mpz_class(1), p);
  return BigFloat(exact, precision_bits);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

void BigFloat::set_precision(long precision_bits) {
  mpfr_prec_round(value_, checked_precision(precision_bits), MPFR_RNDN);
}

BigFloat BigFloat::abs() const {
  BigFloat r(precision());
  mpfr_abs(r.value_, value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  if (sign() < 0) throw Error(ErrorCode::kInvalidArgument, "square root of a negative number");
  BigFloat r(precision());
  mpfr_sqrt(r.value_, value_, MPFR_RNDN);
  return r;
}

std::string BigFloat::to_string(int digits) const {
  if (digits < 1) throw Error(ErrorCode::kInvalidArgument, "digits must be positive");
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";

  mpfr_exp_t exponent = 0;
  std::unique_ptr<char, decltype(&mpfr_free_str)> raw(
      mpfr_get_str(nullptr, &exponent, 10, static_cast<size_t>(digits), value_, MPFR_RNDN),
      &mpfr_free_str);
  std::string mantissa(raw.get());
  std::string sign_prefix;
  if (mantissa.front() == '-') {
    sign_prefix = "-";
    mantissa.erase(0, 1);
  }
  // value = 0.mantissa * 10^exponent
  const long e = static_cast<long>(exponent);
  const long n = static_cast<long>(mantissa.size());
  std::string body;
  if (e > 40 || e < -8) {
    body = mantissa.substr(0, 1);
    if (n > 1) body += "." + mantissa.substr(1);
    body += "e" + std::to_string(e - 1);
  } else if (e <= 0) {
    body = "0." + std::string(static_cast<size_t>(-e), '0') + mantissa;
  } else if (e >= n) {
    body = mantissa + std::string(static_cast<size_t>(e - n), '0');
  } else {
    body = mantissa.substr(0, static_cast<size_t>(e)) + "." + mantissa.substr(static_cast<size_t>(e));
  }
  return sign_prefix + body;
}

std::string BigFloat::to_fixed(int decimals) const {
  if (decimals < 0) throw Error(ErrorCode::kInvalidArgument, "decimals must be nonnegative");
  char* out = nullptr;
  if (mpfr_asprintf(&out, "%.*RNf", decimals, value_) < 0) {
    throw Error(ErrorCode::kInvalidArgument, "formatting failed");
  }
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  if (rhs.precision() > precision()) set_precision(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  if (rhs.precision() > precision()) set_precision(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  if (rhs.precision() > precision()) set_precision(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::kDivisionByZero, "floating division by zero");
  if (rhs.precision() > precision()) set_precision(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat operator+(const BigFloat& lhs, const BigFloat& rhs) {
  BigFloat r(result_precision(lhs, rhs));
  mpfr_add(r.value_, lhs.value_, rhs.value_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& lhs, const BigFloat& rhs) {
  BigFloat r(result_precision(lhs, rhs));
  mpfr_sub(r.value_, lhs.value_, rhs.value_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& lhs, const BigFloat& rhs) {
  BigFloat r(result_precision(lhs, rhs));
  mpfr_mul(r.value_, lhs.value_, rhs.value_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& lhs, const BigFloat& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::kDivisionByZero, "floating division by zero");
  BigFloat r(result_precision(lhs, rhs));
  mpfr_div(r.value_, lhs.value_, rhs.value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigFloat& lhs, const BigFloat& rhs) {
  if (mpfr_unordered_p(lhs.value_, rhs.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(lhs.value_, rhs.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigFloat max(const BigFloat& lhs, const BigFloat& rhs) { return lhs < rhs ? rhs : lhs; }

}  // namespace dreidel
