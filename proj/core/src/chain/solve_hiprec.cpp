#include "dreidel/chain/solve.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include "dreidel/error.hpp"

namespace dreidel {
namespace {

struct HiprecRow {
  std::size_t diagonal_slot = 0;
  std::vector<std::size_t> columns;
  std::vector<BigFloat> values;
};

std::vector<HiprecRow> to_bigfloat_rows(const SparseSystem& system, long precision) {
  std::vector<HiprecRow> rows(system.size());
  for (std::size_t i = 0; i < system.size(); ++i) {
    bool has_diagonal = false;
    for (const auto& e : system.rows[i]) {
      if (e.column == i) {
        rows[i].diagonal_slot = rows[i].columns.size();
        has_diagonal = true;
      }
      rows[i].columns.push_back(e.column);
      rows[i].values.emplace_back(e.value, precision);
    }
    if (!has_diagonal) throw Error(ErrorCode::kSingular, "row without a diagonal entry");
  }
  return rows;
}

BigFloat residual_into(const std::vector<HiprecRow>& rows, const std::vector<BigFloat>& x,
                       std::vector<BigFloat>& r, long precision) {
  BigFloat norm(precision);
  const BigFloat one = BigFloat::from_integer(1, precision);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    BigFloat acc = one;
    for (std::size_t k = 0; k < rows[i].columns.size(); ++k) {
      acc -= rows[i].values[k] * x[rows[i].columns[k]];
    }
    norm = max(norm, acc.abs());
    r[i] = std::move(acc);
  }
  return norm;
}

BigFloat max_value(const std::vector<BigFloat>& x, long precision) {
  BigFloat m(precision);
  for (const auto& v : x) m = max(m, v);
  return m;
}

void check_options(const HiprecOptions& options) {
  if (options.precision_bits < 128) {
    throw Error(ErrorCode::kInvalidArgument, "high-precision solves need at least 128 bits");
  }
  if (options.tolerance.sign() <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  }
}

// Stagnation: no decrease over this many consecutive iterations.
constexpr int kStallLimit = 3;

HiprecSolution refine(const SparseSystem& system, const HiprecOptions& options) {
  const long prec = options.precision_bits;
  const std::size_t n = system.size();
  const auto rows = to_bigfloat_rows(system, prec);

  Eigen::SparseMatrix<double> a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(system.nonzeros());
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : system.rows[i]) {
      triplets.emplace_back(static_cast<int>(i), static_cast<int>(e.column), e.value.to_double());
    }
  }
  a.setFromTriplets(triplets.begin(), triplets.end());
  a.makeCompressed();
  Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
  lu.analyzePattern(a);
  lu.factorize(a);
  if (lu.info() != Eigen::Success) {
    throw Error(ErrorCode::kSingular, "double precision factorization failed");
  }

  HiprecSolution out;
  out.values.assign(n, BigFloat(prec));
  std::vector<BigFloat> r(n, BigFloat(prec));
  Eigen::VectorXd rd(static_cast<Eigen::Index>(n));
  BigFloat best = residual_into(rows, out.values, r, prec);
  int stalled = 0;
  while (best > options.tolerance) {
    if (out.iterations >= options.max_iterations) {
      throw Error(ErrorCode::kNoConvergence, "iteration cap reached in refinement");
    }
    for (std::size_t i = 0; i < n; ++i) rd[static_cast<Eigen::Index>(i)] = r[i].to_double();
    const Eigen::VectorXd d = lu.solve(rd);
    for (std::size_t i = 0; i < n; ++i) {
      out.values[i] += BigFloat(d[static_cast<Eigen::Index>(i)], prec);
    }
    ++out.iterations;
    const BigFloat norm = residual_into(rows, out.values, r, prec);
    if (norm < best) {
      best = norm;
      stalled = 0;
    } else if (++stalled >= kStallLimit) {
      throw Error(ErrorCode::kNoConvergence,
                  "residual stalled at " + best.to_string(6) + "; tolerance too small for precision");
    }
  }
  out.residual_norm = best;
  out.error_bound = options.tolerance * max_value(out.values, prec);
  return out;
}

HiprecSolution gauss_seidel(const SparseSystem& system, const HiprecOptions& options) {
  const long prec = options.precision_bits;
  const std::size_t n = system.size();
  const auto rows = to_bigfloat_rows(system, prec);
  const BigFloat one = BigFloat::from_integer(1, prec);

  HiprecSolution out;
  out.values.assign(n, BigFloat(prec));
  std::vector<BigFloat> r(n, BigFloat(prec));
  BigFloat best = residual_into(rows, out.values, r, prec);
  std::size_t stalled = 0;
  // The max-norm residual of a sweep is not monotone while information is
  // still propagating along the chain.
  const std::size_t stall_window = 100 + 10 * n;
  while (best > options.tolerance) {
    if (out.iterations >= options.max_iterations) {
      throw Error(ErrorCode::kNoConvergence, "iteration cap reached in Gauss-Seidel");
    }
    for (std::size_t i = 0; i < n; ++i) {
      BigFloat acc = one;
      const auto& row = rows[i];
      for (std::size_t k = 0; k < row.columns.size(); ++k) {
        if (k != row.diagonal_slot) acc -= row.values[k] * out.values[row.columns[k]];
      }
      out.values[i] = acc / row.values[row.diagonal_slot];
    }
    ++out.iterations;
    const BigFloat norm = residual_into(rows, out.values, r, prec);
    if (norm < best) {
      best = norm;
      stalled = 0;
    } else if (++stalled >= stall_window) {
      throw Error(ErrorCode::kNoConvergence,
                  "residual stalled at " + best.to_string(6) + "; tolerance too small for precision");
    }
  }
  out.residual_norm = best;
  out.error_bound = options.tolerance * max_value(out.values, prec);
  return out;
}

}  // namespace

HiprecSolution solve_hiprec(const SparseSystem& system, const HiprecOptions& options) {
  check_options(options);
  switch (options.method) {
    case HiprecMethod::kRefinement: return refine(system, options);
    case HiprecMethod::kGaussSeidel: return gauss_seidel(system, options);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown high-precision method");
}

BigFloat residual_norm(const SparseSystem& system, const std::vector<BigFloat>& x) {
  if (x.size() != system.size()) throw Error(ErrorCode::kInvalidArgument, "size mismatch");
  const long prec = x.empty() ? BigFloat::kDefaultPrecision : x.front().precision();
  const auto rows = to_bigfloat_rows(system, prec);
  std::vector<BigFloat> r(x.size(), BigFloat(prec));
  return residual_into(rows, x, r, prec);
}

}  // namespace dreidel
