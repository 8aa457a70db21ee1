#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dreidel/analysis/model.hpp"
#include "dreidel/analysis/values.hpp"
#include "dreidel/arith/dense_solve.hpp"

namespace dreidel {

struct GridBounds {
  int a_min = 0;
  int a_max = 0;
  int b_min = 0;
  int b_max = 0;

  bool empty() const { return a_min > a_max || b_min > b_max; }
  std::size_t size() const;
};

struct FitResult {
  ModelCoefficients coefficients;
  GridBounds grid;
  std::size_t points = 0;
  BigFloat residual_max;
  BigFloat residual_rms;
  std::string arithmetic;  // "exact" or "hiprec<bits>"
  bool underdetermined = false;
};

struct NormalSolution {
  std::vector<Number> coefficients;
  bool underdetermined = false;
};

/// Minimum-norm solution of the normal equations G x = h for a symmetric
/// positive semidefinite rational Gram matrix. The pseudo-inverse is formed
/// exactly from a full-rank factorization G = C W, so only the final product
/// with h rounds when h is approximate.
NormalSolution solve_normal_equations(const RationalMatrix& gram, const std::vector<Number>& rhs);

/// Two-parameter least squares for the simplified game:
/// T(a,b) - (12/19)ab - (2/19)b ~ c2 (a + b) + c0, solved exactly over the
/// rationals from exact T values. Throws kEmptyDomain for an empty grid.
FitResult fit_simplified(GameValues& values, const GridBounds& grid = {30, 60, 30, 60});

/// Four-parameter least squares of Q(a, b) on {ab, a, b, 1} from
/// high-precision full-game values.
FitResult fit_full(GameValues& values, const GridBounds& grid = {15, 25, 15, 25});

/// Recomputes max and RMS residual of `coefficients` against the data.
void recompute_residuals(GameValues& values, Game game, FitResult& fit);

/// JSON with decimal-string coefficients, grid bounds, residual stats and
/// the arithmetic mode.
std::string to_json(const FitResult& fit, int digits = 30);

/// CSV rows "a,b,value,model,epsilon" over the fit grid, with a header.
std::string to_csv(GameValues& values, Game game, const FitResult& fit, int digits = 30);

}  // namespace dreidel
