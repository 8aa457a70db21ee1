#include "dreidel/analysis/symbolic.hpp"

#include "dreidel/arith/series.hpp"
#include "dreidel/error.hpp"

namespace dreidel {
namespace {

const PolyABP kA = PolyABP::var_a();
const PolyABP kB = PolyABP::var_b();
const PolyABP kP = PolyABP::var_p();

PolyABP u(Unknown x) { return PolyABP::unknown(x); }

AffineSolution solve_or_throw(const std::vector<AffineExpr>& constraints, const std::string& what) {
  auto solution = solve_affine_system(constraints);
  if (!solution) throw Error(ErrorCode::kInconsistent, what + " has no consistent solution");
  return *solution;
}

// Upper summation limit scale*v + offset, v one of the variables a or b.
struct Limit {
  char var;
  int scale;
  int offset;

  PolyABP poly() const { return PolyABP(scale) * (var == 'a' ? kA : kB) + PolyABP(offset); }
};

int binomial(int n, int k) {
  int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct SplitSum {
  PolyABP series;  // infinite-sum part
  DroppedTail tail;
};

// sum_{i=1}^{U} x^i f(a, b, i), with the summation index carried in the p
// slot of f. Uses
//   sum_{i=1}^{U} i^k x^i = G_k(x) - x^U sum_l C(k,l) U^(k-l) G_l(x)
// and x^U = (x^scale)^var * x^offset with x^scale required to be 1/4.
SplitSum split_sum(const PolyABP& f, const Rational& x, const Limit& upper) {
  Rational x_scale = 1;
  for (int i = 0; i < upper.scale; ++i) x_scale *= x;
  if (x_scale != Rational(1, 4)) {
    throw Error(ErrorCode::kInvalidArgument, "summation limit does not give a 4^-n tail");
  }
  Rational x_offset = 1;
  for (int i = 0; i < std::abs(upper.offset); ++i) x_offset *= x;
  if (upper.offset < 0) x_offset = x_offset.inverse();

  const PolyABP limit = upper.poly();
  SplitSum out;
  out.tail.var = upper.var;
  for (const auto& [m, coeff] : f.monomials()) {
    const PolyABP outer = PolyABP::term({m.a_exp, m.b_exp, 0}, coeff);
    const int k = m.p_exp;
    out.series += outer * geometric_poly_sum(k, x);
    PolyABP tail_sum;
    PolyABP limit_power(1);  // U^(k-l), built from l = k downwards
    for (int l = k; l >= 0; --l) {
      tail_sum += limit_power * Rational(binomial(k, l)) * geometric_poly_sum(l, x);
      if (l > 0) limit_power = limit_power * limit;
    }
    out.tail.coefficient += outer * tail_sum * x_offset;
  }
  out.tail.coefficient = -out.tail.coefficient;
  return out;
}

KeyCase key_case(std::string name, const Limit& shin_limit, const Limit& first_gimel,
                 const Limit& second_gimel) {
  const PolyABP model = bilinear_model();
  KeyCase out;
  out.name = std::move(name);

  // sum_{i=0}^{L} (1/2)^i = 1 + sum_{i=1}^{L} (1/2)^i
  SplitSum shin = split_sum(PolyABP(1), Rational(1, 2), shin_limit);
  out.key_polynomial += PolyABP(1) + shin.series;
  out.dropped.push_back(shin.tail);

  // sum_{i=1}^{U} 2 (1/4)^i T(b-i, a+i)
  const PolyABP first = poly_shift_substitute(model, {kB - kP, kA + kP, kP}) * Rational(2);
  SplitSum g1 = split_sum(first, Rational(1, 4), first_gimel);
  out.key_polynomial += g1.series;
  out.dropped.push_back(g1.tail);

  // sum_{i=2}^{U} 4 (1/4)^i T(a-i, b+i): the i=1 term is removed explicitly.
  const PolyABP second = poly_shift_substitute(model, {kA - kP, kB + kP, kP}) * Rational(4);
  SplitSum g2 = split_sum(second, Rational(1, 4), second_gimel);
  const PolyABP i_is_one = poly_shift_substitute(second, {kA, kB, PolyABP(1)}) * Rational(1, 4);
  out.key_polynomial += g2.series - i_is_one;
  out.dropped.push_back(g2.tail);

  out.constraints = collect_constraints(model - out.key_polynomial);
  out.solution = solve_or_throw(out.constraints, "Key substitution (" + out.name + ")");
  return out;
}

}  // namespace

PolyABP bilinear_model() {
  return u(Unknown::c3) * kA * kB + u(Unknown::c2) * kA + u(Unknown::c1) * kB + u(Unknown::c0);
}

PolyABP pot_affine_model() {
  return bilinear_model() +
         (kP - PolyABP(2)) * (u(Unknown::s2) * kA + u(Unknown::s1) * kB + u(Unknown::s0));
}

ConstantDerivation derive_constants_recurrence() {
  const PolyABP model = pot_affine_model();
  const PolyABP gimel = poly_shift_substitute(
      model, {.a = kB - PolyABP(1), .b = kA + kP - PolyABP(1), .p = PolyABP(2)});
  const PolyABP shin = poly_shift_substitute(model, {.a = kB, .b = kA - PolyABP(1), .p = kP + PolyABP(1)});

  ConstantDerivation out;
  out.residual = model - PolyABP(1) - gimel * Rational(1, 2) - shin * Rational(1, 2);
  out.constraints = collect_constraints(out.residual);
  out.solution = solve_or_throw(out.constraints, "recurrence substitution");
  return out;
}

KeyConjectureCheck verify_conjecture_in_key() {
  KeyConjectureCheck out;
  // a >= b+1: min(2a-2, 2b-1) = 2b-1, min(a, b) = b, min(a, b+1) = b+1.
  out.above = key_case("a >= b+1", {'b', 2, -1}, {'b', 1, 0}, {'b', 1, 1});
  // a <= b: min(2a-2, 2b-1) = 2a-2, min(a, b) = a, min(a, b+1) = a.
  out.below = key_case("a <= b", {'a', 2, -2}, {'a', 1, 0}, {'a', 1, 0});

  auto same = [](const AffineSolution& x, const AffineSolution& y) {
    return x.solved == y.solved && x.free == y.free;
  };
  out.cases_agree = same(out.above.solution, out.below.solution);
  return out;
}

}  // namespace dreidel
