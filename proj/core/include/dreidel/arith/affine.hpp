#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dreidel/arith/rational.hpp"

namespace dreidel {

/// The closed set of model unknowns: c3..c0 for the bilinear model of T and
/// s2..s0 for the slope of D in the pot direction.
enum class Unknown { c0, c1, c2, c3, s0, s1, s2 };

inline constexpr std::array<Unknown, 7> kAllUnknowns = {
    Unknown::c0, Unknown::c1, Unknown::c2, Unknown::c3,
    Unknown::s0, Unknown::s1, Unknown::s2};

/// Elimination order for solve_affine_system. Anything not eliminated by the
/// time the list is exhausted is reported free.
inline constexpr std::array<Unknown, 7> kPivotOrder = {
    Unknown::c3, Unknown::s1, Unknown::s2, Unknown::s0,
    Unknown::c1, Unknown::c2, Unknown::c0};

std::string_view to_string(Unknown u);
std::optional<Unknown> parse_unknown(std::string_view name);

/// constant + sum(coefficient * unknown). Zero coefficients are never stored.
class AffineExpr {
 public:
  AffineExpr() = default;
  AffineExpr(Rational constant);  // NOLINT(runtime/explicit)
  template <std::integral I>
  AffineExpr(I constant) : AffineExpr(Rational(constant)) {}  // NOLINT(runtime/explicit)

  static AffineExpr variable(Unknown u, Rational coefficient = 1);

  const Rational& constant() const { return constant_; }
  const std::map<Unknown, Rational>& terms() const { return terms_; }
  Rational coefficient(Unknown u) const;

  bool is_constant() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty() && constant_.is_zero(); }

  /// Replaces `u` by `replacement` everywhere it occurs.
  AffineExpr substitute(Unknown u, const AffineExpr& replacement) const;
  /// Fully evaluates; every unknown present must be bound.
  Rational evaluate(const std::map<Unknown, Rational>& values) const;

  std::string to_string() const;

  AffineExpr& operator+=(const AffineExpr& rhs);
  AffineExpr& operator-=(const AffineExpr& rhs);
  AffineExpr& operator*=(const Rational& scale);

  friend AffineExpr operator+(AffineExpr lhs, const AffineExpr& rhs) { return lhs += rhs; }
  friend AffineExpr operator-(AffineExpr lhs, const AffineExpr& rhs) { return lhs -= rhs; }
  friend AffineExpr operator*(AffineExpr lhs, const Rational& scale) { return lhs *= scale; }
  friend AffineExpr operator*(const Rational& scale, AffineExpr rhs) { return rhs *= scale; }
  AffineExpr operator-() const { return *this * Rational(-1); }

  friend bool operator==(const AffineExpr&, const AffineExpr&) = default;

 private:
  void add_term(Unknown u, const Rational& coefficient);

  Rational constant_;
  std::map<Unknown, Rational> terms_;
};

/// Solution of a linear system over the unknowns: each eliminated unknown is
/// expressed in the free ones.
struct AffineSolution {
  std::map<Unknown, AffineExpr> solved;
  std::vector<Unknown> free;

  bool is_free(Unknown u) const;
  /// Applies the solution to an expression, leaving only free unknowns.
  AffineExpr apply(const AffineExpr& expr) const;
};

/// Exact Gauss-Jordan elimination with pivots chosen in kPivotOrder.
/// Returns nullopt when the constraints are inconsistent.
std::optional<AffineSolution> solve_affine_system(std::span<const AffineExpr> constraints);

}  // namespace dreidel
