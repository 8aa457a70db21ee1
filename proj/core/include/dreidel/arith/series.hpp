#pragma once

#include "dreidel/arith/rational.hpp"

namespace dreidel {

/// Closed form of sum_{i>=1} i^degree * x^i for degree in {0, 1, 2}, |x| < 1:
///   x/(1-x),  x/(1-x)^2,  x(1+x)/(1-x)^3.
/// Throws kInvalidArgument outside that domain.
Rational geometric_poly_sum(int degree, const Rational& x);

}  // namespace dreidel
