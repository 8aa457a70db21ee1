#include "dreidel/arith/rational.hpp"

#include <cctype>

#include "dreidel/error.hpp"

namespace dreidel {
namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : Rational(mpz_class(static_cast<long>(numerator)),
               mpz_class(static_cast<long>(denominator))) {}

Rational::Rational(mpz_class numerator, mpz_class denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::kDivisionByZero, "rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) {
    throw Error(ErrorCode::kDivisionByZero, "rational with zero denominator");
  }
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
    throw Error(ErrorCode::kParse, "not a rational literal: '" + std::string(text) + "'");
  }
  return Rational(mpz_class(std::string(num)), mpz_class(std::string(den)));
}

Rational Rational::power_of_two(long exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent >= 0 ? Rational(p, mpz_class(1)) : Rational(mpz_class(1), p);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const { return Rational(1) / *this; }

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::kDivisionByZero, "rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r(*this);
  mpq_neg(r.value_.get_mpq_t(), r.value_.get_mpq_t());
  return r;
}

}  // namespace dreidel
