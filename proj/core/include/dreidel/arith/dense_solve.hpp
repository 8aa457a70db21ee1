#pragma once

#include <vector>

#include "dreidel/arith/rational.hpp"

namespace dreidel {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves A x = rhs exactly. Rows are scaled to integers and reduced with
/// fraction-free (Bareiss) elimination, so intermediate entries stay integral
/// and bounded by minors of A. Throws kSingular for a singular A and
/// kInvalidArgument on shape mismatch.
std::vector<Rational> solve_dense_exact(const RationalMatrix& a, const std::vector<Rational>& rhs);

}  // namespace dreidel
