#pragma once

#include <string>
#include <vector>

#include "dreidel/arith/affine.hpp"
#include "dreidel/arith/poly.hpp"

namespace dreidel {

/// c3*ab + c2*a + c1*b + c0.
PolyABP bilinear_model();

/// c3*ab + c2*a + c1*b + c0 + (p - 2)(s2*a + s1*b + s0).
PolyABP pot_affine_model();

struct ConstantDerivation {
  /// model(a,p,b) - 1 - model(b-1,2,a+p-1)/2 - model(b,p+1,a-1)/2
  PolyABP residual;
  std::vector<AffineExpr> constraints;
  AffineSolution solution;
};

/// Substitutes pot_affine_model() into the simplified recurrence and solves
/// the coefficient equations. Throws kInconsistent if they have no solution.
ConstantDerivation derive_constants_recurrence();

/// Exponentially small remainder dropped from a sum: coefficient * 4^-var.
struct DroppedTail {
  char var = 'a';
  PolyABP coefficient;
};

struct KeyCase {
  std::string name;
  PolyABP key_polynomial;  // right-hand side of the Key equation, tails dropped
  std::vector<DroppedTail> dropped;
  std::vector<AffineExpr> constraints;
  AffineSolution solution;
};

struct KeyConjectureCheck {
  KeyCase above;  // a >= b + 1
  KeyCase below;  // a <= b
  bool cases_agree = false;
};

/// Substitutes bilinear_model() for every T in the Key expansion of T(a, b).
/// Each finite sum is split as (infinite series) - 4^-a or 4^-b * (poly),
/// the exponential tail is recorded and dropped, and T(a, b) - rhs is
/// solved for the unknowns. Done separately for the two orderings of a and b
/// that fix the summation limits. Throws kInconsistent if either case has no
/// solution.
KeyConjectureCheck verify_conjecture_in_key();

}  // namespace dreidel
