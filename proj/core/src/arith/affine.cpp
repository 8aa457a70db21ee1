#include "dreidel/arith/affine.hpp"

#include <algorithm>

#include "dreidel/error.hpp"

namespace dreidel {

std::string_view to_string(Unknown u) {
  switch (u) {
    case Unknown::c0: return "c0";
    case Unknown::c1: return "c1";
    case Unknown::c2: return "c2";
    case Unknown::c3: return "c3";
    case Unknown::s0: return "s0";
    case Unknown::s1: return "s1";
    case Unknown::s2: return "s2";
  }
  return "?";
}

std::optional<Unknown> parse_unknown(std::string_view name) {
  for (Unknown u : kAllUnknowns) {
    if (to_string(u) == name) return u;
  }
  return std::nullopt;
}

AffineExpr::AffineExpr(Rational constant) : constant_(std::move(constant)) {}

AffineExpr AffineExpr::variable(Unknown u, Rational coefficient) {
  AffineExpr e;
  e.add_term(u, coefficient);
  return e;
}

Rational AffineExpr::coefficient(Unknown u) const {
  const auto it = terms_.find(u);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AffineExpr::add_term(Unknown u, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(u, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AffineExpr AffineExpr::substitute(Unknown u, const AffineExpr& replacement) const {
  const auto it = terms_.find(u);
  if (it == terms_.end()) return *this;
  AffineExpr out = *this;
  const Rational scale = it->second;
  out.terms_.erase(u);
  out += replacement * scale;
  return out;
}

Rational AffineExpr::evaluate(const std::map<Unknown, Rational>& values) const {
  Rational total = constant_;
  for (const auto& [u, c] : terms_) {
    const auto it = values.find(u);
    if (it == values.end()) {
      throw Error(ErrorCode::kMissingValue,
                  "no value bound for unknown " + std::string(dreidel::to_string(u)));
    }
    total += c * it->second;
  }
  return total;
}

std::string AffineExpr::to_string() const {
  std::string out;
  for (Unknown u : kAllUnknowns) {
    const auto it = terms_.find(u);
    if (it == terms_.end()) continue;
    const Rational& c = it->second;
    std::string mag = c.abs() == Rational(1) ? "" : c.abs().to_string() + "*";
    if (out.empty()) {
      out = (c.sign() < 0 ? "-" : "") + mag + std::string(dreidel::to_string(u));
    } else {
      out += (c.sign() < 0 ? " - " : " + ") + mag + std::string(dreidel::to_string(u));
    }
  }
  if (out.empty()) return constant_.to_string();
  if (!constant_.is_zero()) {
    out += (constant_.sign() < 0 ? " - " : " + ") + constant_.abs().to_string();
  }
  return out;
}

AffineExpr& AffineExpr::operator+=(const AffineExpr& rhs) {
  constant_ += rhs.constant_;
  for (const auto& [u, c] : rhs.terms_) add_term(u, c);
  return *this;
}

AffineExpr& AffineExpr::operator-=(const AffineExpr& rhs) {
  constant_ -= rhs.constant_;
  for (const auto& [u, c] : rhs.terms_) add_term(u, -c);
  return *this;
}

AffineExpr& AffineExpr::operator*=(const Rational& scale) {
  if (scale.is_zero()) {
    constant_ = 0;
    terms_.clear();
    return *this;
  }
  constant_ *= scale;
  for (auto& [u, c] : terms_) c *= scale;
  return *this;
}

bool AffineSolution::is_free(Unknown u) const {
  return std::find(free.begin(), free.end(), u) != free.end();
}

AffineExpr AffineSolution::apply(const AffineExpr& expr) const {
  AffineExpr out = expr;
  for (const auto& [u, value] : solved) out = out.substitute(u, value);
  return out;
}

std::optional<AffineSolution> solve_affine_system(std::span<const AffineExpr> constraints) {
  std::vector<AffineExpr> rows(constraints.begin(), constraints.end());
  std::vector<bool> used(rows.size(), false);
  AffineSolution solution;

  for (Unknown pivot : kPivotOrder) {
    std::size_t chosen = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!used[i] && !rows[i].coefficient(pivot).is_zero()) {
        chosen = i;
        break;
      }
    }
    if (chosen == rows.size()) continue;
    used[chosen] = true;

    // row = k*pivot + rest = 0  =>  pivot = -rest/k
    const Rational k = rows[chosen].coefficient(pivot);
    AffineExpr rest = rows[chosen] - AffineExpr::variable(pivot, k);
    AffineExpr value = rest * (Rational(-1) / k);

    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!used[i]) rows[i] = rows[i].substitute(pivot, value);
    }
    for (auto& [u, expr] : solution.solved) expr = expr.substitute(pivot, value);
    solution.solved.emplace(pivot, std::move(value));
  }

  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!used[i] && !rows[i].is_zero()) return std::nullopt;
  }
  for (Unknown u : kAllUnknowns) {
    if (!solution.solved.contains(u)) solution.free.push_back(u);
  }
  return solution;
}

}  // namespace dreidel
