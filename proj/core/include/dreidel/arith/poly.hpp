#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "dreidel/arith/affine.hpp"

namespace dreidel {

/// Exponent triple of a^a_exp * b^b_exp * p^p_exp.
struct Monomial {
  int a_exp = 0;
  int b_exp = 0;
  int p_exp = 0;

  int degree() const { return a_exp + b_exp + p_exp; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

std::string to_string(const Monomial& m);

/// Polynomial in the formal variables a, b, p whose coefficients are affine
/// expressions over the model unknowns. Total degree is capped at kMaxDegree
/// and products of two unknown-carrying coefficients are rejected, so every
/// coefficient stays affine.
class PolyABP {
 public:
  static constexpr int kMaxDegree = 3;

  PolyABP() = default;
  PolyABP(AffineExpr constant);  // NOLINT(runtime/explicit)
  PolyABP(Rational constant) : PolyABP(AffineExpr(std::move(constant))) {}  // NOLINT
  template <std::integral I>
  PolyABP(I constant) : PolyABP(AffineExpr(Rational(constant))) {}  // NOLINT

  static PolyABP var_a();
  static PolyABP var_b();
  static PolyABP var_p();
  static PolyABP unknown(Unknown u);
  static PolyABP term(Monomial m, AffineExpr coefficient);

  const std::map<Monomial, AffineExpr>& monomials() const { return monomials_; }
  AffineExpr coefficient(const Monomial& m) const;
  int degree() const;
  bool is_zero() const { return monomials_.empty(); }
  /// True when no coefficient mentions an unknown.
  bool is_numeric() const;

  /// Substitutes numbers for a, b, p.
  AffineExpr evaluate(const Rational& a, const Rational& b, const Rational& p) const;
  /// Applies a solved/bound assignment of unknowns to every coefficient.
  PolyABP map_coefficients(const AffineSolution& solution) const;

  std::string to_string() const;

  PolyABP& operator+=(const PolyABP& rhs);
  PolyABP& operator-=(const PolyABP& rhs);
  PolyABP& operator*=(const Rational& scale);

  friend PolyABP operator+(PolyABP lhs, const PolyABP& rhs) { return lhs += rhs; }
  friend PolyABP operator-(PolyABP lhs, const PolyABP& rhs) { return lhs -= rhs; }
  friend PolyABP operator*(PolyABP lhs, const Rational& s) { return lhs *= s; }
  friend PolyABP operator*(const Rational& s, PolyABP rhs) { return rhs *= s; }
  friend PolyABP operator*(const PolyABP& lhs, const PolyABP& rhs);
  PolyABP operator-() const { return *this * Rational(-1); }

  friend bool operator==(const PolyABP&, const PolyABP&) = default;

 private:
  void add(const Monomial& m, const AffineExpr& c);

  std::map<Monomial, AffineExpr> monomials_;
};

/// Images of a, b, p under a change of variables. Each image must be an
/// integer-coefficient polynomial of degree at most 1 with no unknowns.
struct AffineSubstitution {
  PolyABP a = PolyABP::var_a();
  PolyABP b = PolyABP::var_b();
  PolyABP p = PolyABP::var_p();
};

/// Composes `poly` with the substitution. Throws kInvalidArgument for
/// non-affine images.
PolyABP poly_shift_substitute(const PolyABP& poly, const AffineSubstitution& mapping);

/// Coefficient of every monomial present, in monomial order. The polynomial
/// is identically zero iff every returned expression is zero.
std::vector<AffineExpr> collect_constraints(const PolyABP& poly);

}  // namespace dreidel
