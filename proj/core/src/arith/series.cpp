#include "dreidel/arith/series.hpp"

#include "dreidel/error.hpp"

namespace dreidel {

Rational geometric_poly_sum(int degree, const Rational& x) {
  if (x.abs() >= Rational(1)) {
    throw Error(ErrorCode::kInvalidArgument, "geometric sum needs |x| < 1");
  }
  const Rational q = Rational(1) - x;
  switch (degree) {
    case 0: return x / q;
    case 1: return x / (q * q);
    case 2: return x * (Rational(1) + x) / (q * q * q);
    default:
      throw Error(ErrorCode::kInvalidArgument, "geometric sum degree must be 0, 1 or 2");
  }
}

}  // namespace dreidel
