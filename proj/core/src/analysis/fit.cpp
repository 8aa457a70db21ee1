#include "dreidel/analysis/fit.hpp"

#include <sstream>

#include "json.hpp"

#include "dreidel/error.hpp"

namespace dreidel {
namespace {

RationalMatrix zeros(std::size_t rows, std::size_t cols) {
  return RationalMatrix(rows, std::vector<Rational>(cols));
}

RationalMatrix transpose(const RationalMatrix& m) {
  if (m.empty()) return {};
  RationalMatrix t = zeros(m.front().size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  }
  return t;
}

RationalMatrix multiply(const RationalMatrix& x, const RationalMatrix& y) {
  const std::size_t inner = y.size();
  const std::size_t cols = inner == 0 ? 0 : y.front().size();
  RationalMatrix out = zeros(x.size(), cols);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (x[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += x[i][k] * y[k][j];
    }
  }
  return out;
}

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix inv = zeros(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n);
    e[j] = 1;
    const auto col = solve_dense_exact(m, e);
    for (std::size_t i = 0; i < n; ++i) inv[i][j] = col[i];
  }
  return inv;
}

// Indices of a maximal set of linearly independent columns, left to right.
std::vector<std::size_t> independent_columns(RationalMatrix m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

void check_grid(const GridBounds& grid) {
  if (grid.empty()) throw Error(ErrorCode::kEmptyDomain, "empty fit grid");
  if (grid.a_min < 1 || grid.b_min < 1) {
    throw Error(ErrorCode::kInvalidArgument, "fit grid must lie in a, b >= 1");
  }
}

ModelCoefficients to_bigfloat(const ModelCoefficients& m, long precision) {
  ModelCoefficients out = m;
  auto conv = [precision](const Number& x) { return Number(x.to_bigfloat(precision)); };
  out.c3 = conv(m.c3);
  out.c2 = conv(m.c2);
  out.c1 = conv(m.c1);
  out.c0 = conv(m.c0);
  if (m.s2) out.s2 = conv(*m.s2);
  if (m.s1) out.s1 = conv(*m.s1);
  if (m.s0) out.s0 = conv(*m.s0);
  return out;
}

BigFloat data_value(GameValues& values, Game game, int a, int b) {
  if (game == Game::kSimplified) return BigFloat(values.simplified_T(a, b), values.precision_bits());
  return values.full_Q(a, b);
}

}  // namespace

std::size_t GridBounds::size() const {
  if (empty()) return 0;
  return static_cast<std::size_t>(a_max - a_min + 1) * static_cast<std::size_t>(b_max - b_min + 1);
}

NormalSolution solve_normal_equations(const RationalMatrix& gram, const std::vector<Number>& rhs) {
  const std::size_t k = gram.size();
  if (rhs.size() != k) throw Error(ErrorCode::kInvalidArgument, "normal equations size mismatch");

  const auto basis = independent_columns(gram);
  NormalSolution out;
  RationalMatrix pinv;
  if (basis.size() == k) {
    pinv = inverse(gram);
  } else {
    out.underdetermined = true;
    if (basis.empty()) {
      pinv = zeros(k, k);
    } else {
      // G = C W with C = G[:, basis]; G+ = W^T (W W^T)^-1 (C^T C)^-1 C^T.
      RationalMatrix c = zeros(k, basis.size());
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) c[i][j] = gram[i][basis[j]];
      }
      const RationalMatrix ct = transpose(c);
      const RationalMatrix ctc_inv = inverse(multiply(ct, c));
      const RationalMatrix w = multiply(multiply(ctc_inv, ct), gram);
      const RationalMatrix wt = transpose(w);
      pinv = multiply(multiply(multiply(wt, inverse(multiply(w, wt))), ctc_inv), ct);
    }
  }

  out.coefficients.assign(k, Number(0));
  for (std::size_t i = 0; i < k; ++i) {
    Number acc(0);
    for (std::size_t j = 0; j < k; ++j) {
      if (!pinv[i][j].is_zero()) acc = acc + Number(pinv[i][j]) * rhs[j];
    }
    out.coefficients[i] = acc;
  }
  return out;
}

FitResult fit_simplified(GameValues& values, const GridBounds& grid) {
  check_grid(grid);
  // Basis {a+b, 1}. The first basis function is constant along each line
  // a + b = m, and all exact T on a line share one denominator, so sums are
  // accumulated per line before being combined.
  Rational sum_y = 0;
  Rational sum_uy = 0;
  Rational sum_u = 0;
  Rational sum_uu = 0;
  const Rational c3(12, 19);
  const Rational gap(2, 19);
  for (int m = grid.a_min + grid.b_min; m <= grid.a_max + grid.b_max; ++m) {
    Rational line_y = 0;
    int count = 0;
    for (int a = std::max(grid.a_min, m - grid.b_max); a <= std::min(grid.a_max, m - grid.b_min); ++a) {
      const int b = m - a;
      line_y += values.simplified_T(a, b) - c3 * Rational(a * b) - gap * Rational(b);
      ++count;
    }
    if (count == 0) continue;
    sum_y += line_y;
    sum_uy += Rational(m) * line_y;
    sum_u += Rational(m * count);
    sum_uu += Rational(m * m * count);
  }

  const Rational n(static_cast<long>(grid.size()));
  const RationalMatrix gram = {{sum_uu, sum_u}, {sum_u, n}};
  const NormalSolution sol = solve_normal_equations(gram, {Number(sum_uy), Number(sum_y)});

  FitResult fit;
  fit.coefficients = simplified_model(sol.coefficients[0], sol.coefficients[1]);
  fit.grid = grid;
  fit.points = grid.size();
  fit.arithmetic = "exact";
  fit.underdetermined = sol.underdetermined;
  recompute_residuals(values, Game::kSimplified, fit);
  return fit;
}

FitResult fit_full(GameValues& values, const GridBounds& grid) {
  check_grid(grid);
  const long prec = values.precision_bits();
  RationalMatrix gram = zeros(4, 4);
  std::vector<Number> rhs(4, Number(BigFloat(prec)));
  for (int a = grid.a_min; a <= grid.a_max; ++a) {
    for (int b = grid.b_min; b <= grid.b_max; ++b) {
      const std::array<long, 4> phi = {static_cast<long>(a) * b, a, b, 1};
      const BigFloat q = values.full_Q(a, b);
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) gram[i][j] += Rational(phi[i] * phi[j]);
        rhs[i] = rhs[i] + Number(q * BigFloat(phi[i], prec));
      }
    }
  }
  const NormalSolution sol = solve_normal_equations(gram, rhs);

  FitResult fit;
  fit.coefficients.game = Game::kFull;
  fit.coefficients.c3 = sol.coefficients[0];
  fit.coefficients.c2 = sol.coefficients[1];
  fit.coefficients.c1 = sol.coefficients[2];
  fit.coefficients.c0 = sol.coefficients[3];
  fit.grid = grid;
  fit.points = grid.size();
  fit.arithmetic = "hiprec" + std::to_string(prec);
  fit.underdetermined = sol.underdetermined;
  recompute_residuals(values, Game::kFull, fit);
  return fit;
}

void recompute_residuals(GameValues& values, Game game, FitResult& fit) {
  const long prec = values.precision_bits();
  const auto& c = fit.coefficients;
  // Exact fits get exact residuals, rounded once.
  const bool exact = game == Game::kSimplified && c.c3.is_exact() && c.c2.is_exact() &&
                     c.c1.is_exact() && c.c0.is_exact();
  const ModelCoefficients model = to_bigfloat(fit.coefficients, prec);
  BigFloat worst(prec);
  BigFloat sum_sq(prec);
  for (int a = fit.grid.a_min; a <= fit.grid.a_max; ++a) {
    for (int b = fit.grid.b_min; b <= fit.grid.b_max; ++b) {
      const BigFloat r =
          exact ? BigFloat(values.simplified_T(a, b) - eval_model(c, a, b).exact(), prec)
                : data_value(values, game, a, b) - eval_model(model, a, b).to_bigfloat(prec);
      worst = max(worst, r.abs());
      sum_sq += r * r;
    }
  }
  fit.residual_max = worst;
  fit.residual_rms = (sum_sq / BigFloat::from_integer(static_cast<long>(fit.grid.size()), prec)).sqrt();
}

std::string to_json(const FitResult& fit, int digits) {
  nlohmann::ordered_json j;
  j["game"] = fit.coefficients.game ? std::string(to_string(*fit.coefficients.game)) : "";
  nlohmann::ordered_json coeffs;
  const auto& m = fit.coefficients;
  auto render = [digits](const Number& x) {
    return x.is_exact() ? BigFloat(x.exact(), 512).to_string(digits) : x.to_string(digits);
  };
  coeffs["c3"] = render(m.c3);
  coeffs["c2"] = render(m.c2);
  coeffs["c1"] = render(m.c1);
  coeffs["c0"] = render(m.c0);
  if (m.has_pot_terms()) {
    coeffs["s2"] = render(*m.s2);
    coeffs["s1"] = render(*m.s1);
    coeffs["s0"] = render(*m.s0);
  }
  j["coefficients"] = coeffs;
  j["grid"] = {{"a_min", fit.grid.a_min}, {"a_max", fit.grid.a_max},
               {"b_min", fit.grid.b_min}, {"b_max", fit.grid.b_max}};
  j["points"] = fit.points;
  j["residual_max"] = fit.residual_max.to_string(6);
  j["residual_rms"] = fit.residual_rms.to_string(6);
  j["arithmetic"] = fit.arithmetic;
  j["underdetermined"] = fit.underdetermined;
  return j.dump();
}

std::string to_csv(GameValues& values, Game game, const FitResult& fit, int digits) {
  const long prec = values.precision_bits();
  const ModelCoefficients model = to_bigfloat(fit.coefficients, prec);
  std::ostringstream out;
  out << "a,b,value,model,epsilon\n";
  for (int a = fit.grid.a_min; a <= fit.grid.a_max; ++a) {
    for (int b = fit.grid.b_min; b <= fit.grid.b_max; ++b) {
      const BigFloat v = data_value(values, game, a, b);
      const BigFloat mv = eval_model(model, a, b).to_bigfloat(prec);
      out << a << ',' << b << ',' << v.to_string(digits) << ',' << mv.to_string(digits) << ','
          << (v - mv).to_string(6) << '\n';
    }
  }
  return out.str();
}

}  // namespace dreidel
