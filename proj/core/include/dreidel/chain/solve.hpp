#pragma once

#include <cstddef>
#include <vector>

#include "dreidel/arith/bigfloat.hpp"
#include "dreidel/arith/rational.hpp"
#include "dreidel/chain/system.hpp"

namespace dreidel {

/// Exact solution of (I - P) x = 1 by sparse Gaussian elimination over the
/// rationals. The pivot column is the active column with the fewest nonzeros
/// and the pivot row the shortest row in it, which keeps fill low for chains
/// whose transitions mostly feed a few hub states. Throws kSingular if some
/// column runs out of candidates (absorption is not certain).
std::vector<Rational> solve_exact(const SparseSystem& system);

enum class HiprecMethod {
  /// Defect correction: residuals in BigFloat, corrections from a double
  /// precision sparse LU of the same matrix.
  kRefinement,
  /// Plain Gauss-Seidel sweeps in enumeration order.
  kGaussSeidel,
};

struct HiprecOptions {
  long precision_bits = BigFloat::kDefaultPrecision;
  BigFloat tolerance = BigFloat::power_of_ten(-30);
  HiprecMethod method = HiprecMethod::kRefinement;
  std::size_t max_iterations = 10'000'000;
};

struct HiprecSolution {
  std::vector<BigFloat> values;
  /// max_i |((I - P) x - 1)_i| at exit; never above the tolerance.
  BigFloat residual_norm;
  /// tolerance * max_i x_i. Since (I - P)^{-1} is nonnegative with
  /// (I - P)^{-1} 1 = x, its infinity norm is max x, which bounds the error.
  BigFloat error_bound;
  std::size_t iterations = 0;
};

/// Iterates until the infinity-norm residual is at most options.tolerance.
/// Throws kNoConvergence when the iteration cap is hit or the residual stops
/// decreasing (tolerance below what the precision can resolve).
HiprecSolution solve_hiprec(const SparseSystem& system, const HiprecOptions& options = {});

/// max_i |((I - P) x - 1)_i| evaluated at the precision of x.
BigFloat residual_norm(const SparseSystem& system, const std::vector<BigFloat>& x);

}  // namespace dreidel
