#include "dreidel/arith/poly.hpp"

#include <algorithm>

#include "dreidel/error.hpp"

namespace dreidel {
namespace {

AffineExpr multiply(const AffineExpr& x, const AffineExpr& y) {
  if (x.is_constant()) return y * x.constant();
  if (y.is_constant()) return x * y.constant();
  throw Error(ErrorCode::kInvalidArgument,
              "product of two unknown-carrying coefficients is not affine");
}

void validate_image(const PolyABP& image, const char* name) {
  if (image.degree() > 1 || !image.is_numeric()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("substitution image for ") + name + " is not affine");
  }
  for (const auto& [m, c] : image.monomials()) {
    if (!c.constant().is_integer()) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("substitution image for ") + name + " has non-integer coefficients");
    }
  }
}

PolyABP power(const PolyABP& base, int exponent) {
  PolyABP out(1);
  for (int i = 0; i < exponent; ++i) out = out * base;
  return out;
}

}  // namespace

std::string to_string(const Monomial& m) {
  std::string out;
  auto append = [&out](const char* v, int e) {
    if (e == 0) return;
    out += v;
    if (e > 1) out += "^" + std::to_string(e);
  };
  append("a", m.a_exp);
  append("b", m.b_exp);
  append("p", m.p_exp);
  return out.empty() ? "1" : out;
}

PolyABP::PolyABP(AffineExpr constant) { add({}, constant); }

PolyABP PolyABP::var_a() { return term({1, 0, 0}, Rational(1)); }
PolyABP PolyABP::var_b() { return term({0, 1, 0}, Rational(1)); }
PolyABP PolyABP::var_p() { return term({0, 0, 1}, Rational(1)); }
PolyABP PolyABP::unknown(Unknown u) { return PolyABP(AffineExpr::variable(u)); }

PolyABP PolyABP::term(Monomial m, AffineExpr coefficient) {
  if (m.a_exp < 0 || m.b_exp < 0 || m.p_exp < 0 || m.degree() > kMaxDegree) {
    throw Error(ErrorCode::kInvalidArgument, "monomial outside the supported degree range");
  }
  PolyABP out;
  out.add(m, coefficient);
  return out;
}

void PolyABP::add(const Monomial& m, const AffineExpr& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = monomials_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) monomials_.erase(it);
  }
}

AffineExpr PolyABP::coefficient(const Monomial& m) const {
  const auto it = monomials_.find(m);
  return it == monomials_.end() ? AffineExpr() : it->second;
}

int PolyABP::degree() const {
  int d = 0;
  for (const auto& [m, c] : monomials_) d = std::max(d, m.degree());
  return d;
}

bool PolyABP::is_numeric() const {
  return std::all_of(monomials_.begin(), monomials_.end(),
                     [](const auto& entry) { return entry.second.is_constant(); });
}

AffineExpr PolyABP::evaluate(const Rational& a, const Rational& b, const Rational& p) const {
  AffineExpr out;
  for (const auto& [m, c] : monomials_) {
    Rational scale = 1;
    for (int i = 0; i < m.a_exp; ++i) scale *= a;
    for (int i = 0; i < m.b_exp; ++i) scale *= b;
    for (int i = 0; i < m.p_exp; ++i) scale *= p;
    out += c * scale;
  }
  return out;
}

PolyABP PolyABP::map_coefficients(const AffineSolution& solution) const {
  PolyABP out;
  for (const auto& [m, c] : monomials_) out.add(m, solution.apply(c));
  return out;
}

std::string PolyABP::to_string() const {
  if (monomials_.empty()) return "0";
  std::string out;
  for (auto it = monomials_.rbegin(); it != monomials_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + it->second.to_string() + ")";
    if (it->first.degree() > 0) out += "*" + dreidel::to_string(it->first);
  }
  return out;
}

PolyABP& PolyABP::operator+=(const PolyABP& rhs) {
  for (const auto& [m, c] : rhs.monomials_) add(m, c);
  return *this;
}

PolyABP& PolyABP::operator-=(const PolyABP& rhs) {
  for (const auto& [m, c] : rhs.monomials_) add(m, -c);
  return *this;
}

PolyABP& PolyABP::operator*=(const Rational& scale) {
  if (scale.is_zero()) {
    monomials_.clear();
    return *this;
  }
  for (auto& [m, c] : monomials_) c *= scale;
  return *this;
}

PolyABP operator*(const PolyABP& lhs, const PolyABP& rhs) {
  PolyABP out;
  for (const auto& [ml, cl] : lhs.monomials_) {
    for (const auto& [mr, cr] : rhs.monomials_) {
      const Monomial m{ml.a_exp + mr.a_exp, ml.b_exp + mr.b_exp, ml.p_exp + mr.p_exp};
      if (m.degree() > PolyABP::kMaxDegree) {
        throw Error(ErrorCode::kInvalidArgument, "polynomial degree exceeds the supported cap");
      }
      out.add(m, multiply(cl, cr));
    }
  }
  return out;
}

PolyABP poly_shift_substitute(const PolyABP& poly, const AffineSubstitution& mapping) {
  validate_image(mapping.a, "a");
  validate_image(mapping.b, "b");
  validate_image(mapping.p, "p");
  PolyABP out;
  for (const auto& [m, c] : poly.monomials()) {
    out += power(mapping.a, m.a_exp) * power(mapping.b, m.b_exp) * power(mapping.p, m.p_exp) *
           PolyABP(c);
  }
  return out;
}

std::vector<AffineExpr> collect_constraints(const PolyABP& poly) {
  std::vector<AffineExpr> out;
  out.reserve(poly.monomials().size());
  for (const auto& [m, c] : poly.monomials()) out.push_back(c);
  return out;
}

}  // namespace dreidel
