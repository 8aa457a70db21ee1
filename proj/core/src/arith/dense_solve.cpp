#include "dreidel/arith/dense_solve.hpp"

#include <utility>

#include "dreidel/error.hpp"

namespace dreidel {

std::vector<Rational> solve_dense_exact(const RationalMatrix& a, const std::vector<Rational>& rhs) {
  const std::size_t n = a.size();
  if (rhs.size() != n) throw Error(ErrorCode::kInvalidArgument, "right-hand side size mismatch");
  for (const auto& row : a) {
    if (row.size() != n) throw Error(ErrorCode::kInvalidArgument, "matrix is not square");
  }
  if (n == 0) return {};

  // Augmented integer matrix [A | rhs], each row cleared of denominators.
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class scale = rhs[i].denominator();
    for (const auto& x : a[i]) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get().get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = a[i][j].get().get_num() * (scale / a[i][j].get().get_den());
    }
    m[i][n] = rhs[i].get().get_num() * (scale / rhs[i].get().get_den());
  }

  mpz_class previous = 1;
  mpz_class t;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::kSingular, "matrix is singular");
    if (pivot != k) std::swap(m[pivot], m[k]);

    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        // m[i][j] = (m[k][k] m[i][j] - m[i][k] m[k][j]) / previous, exact.
        mpz_mul(t.get_mpz_t(), m[i][k].get_mpz_t(), m[k][j].get_mpz_t());
        mpz_mul(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), m[k][k].get_mpz_t());
        mpz_sub(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), t.get_mpz_t());
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), previous.get_mpz_t());
      }
      m[i][k] = 0;
    }
    previous = m[k][k];
  }

  // Back substitution on the integer upper-triangular system. Every row of
  // the Bareiss triangle shares the determinant as a common denominator of
  // the solution, so work with numerators over det and reduce once at the end.
  const mpz_class det = m[n - 1][n - 1];
  std::vector<mpz_class> numer(n);  // x_i = numer[i] / det
  for (std::size_t ii = n; ii-- > 0;) {
    mpz_class acc = m[ii][n] * det;
    for (std::size_t j = ii + 1; j < n; ++j) {
      mpz_mul(t.get_mpz_t(), m[ii][j].get_mpz_t(), numer[j].get_mpz_t());
      mpz_sub(acc.get_mpz_t(), acc.get_mpz_t(), t.get_mpz_t());
    }
    mpz_divexact(numer[ii].get_mpz_t(), acc.get_mpz_t(), m[ii][ii].get_mpz_t());
  }

  std::vector<Rational> x;
  x.reserve(n);
  for (std::size_t i = 0; i < n; ++i) x.emplace_back(numer[i], det);
  return x;
}

}  // namespace dreidel
