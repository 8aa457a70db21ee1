#include "dreidel/keyeq/keyeq.hpp"

#include <algorithm>

#include "json.hpp"

#include "dreidel/arith/dense_solve.hpp"
#include "dreidel/error.hpp"
#include "dreidel/games/rules.hpp"

namespace dreidel {
namespace {

void add_term(TCombination& c, int x, int y, const Rational& weight) {
  if (x == 0 || y == 0 || weight.is_zero()) return;
  auto [it, inserted] = c.terms.try_emplace({x, y}, weight);
  if (!inserted) {
    it->second += weight;
    if (it->second.is_zero()) c.terms.erase(it);
  }
}

std::vector<Rational> chain_line(int line_total, SpinSolver* solver) {
  SpinSolver local;
  SpinSolver& s = solver != nullptr ? *solver : local;
  std::vector<Rational> out;
  for (int a = 1; a <= line_total - 1; ++a) {
    out.push_back(s.expected_spins(Game::kSimplified, {a, 2, line_total - a}, SolveMode::kExact).exact());
  }
  return out;
}

}  // namespace

Rational TCombination::coefficient(int x, int y) const {
  const auto it = terms.find({x, y});
  return it == terms.end() ? Rational(0) : it->second;
}

TCombination expand_shin_chain(int a, int p, int b) {
  if (a < 1 || b < 1 || p < 0) {
    throw Error(ErrorCode::kInvalidArgument, "shin-chain expansion needs a, b >= 1 and p >= 0");
  }
  TCombination out;
  out.line_total = a + p + b - 2;

  // Walk the all-shin path; `weight` is the probability of having reached
  // the current state, each visit costs one spin.
  GameState s{a, p, b};
  Rational weight = 1;
  const Rational half(1, 2);
  while (true) {
    out.constant += weight;
    const Rational branch = weight * half;
    const GameState gimel{s.b - 1, 2, s.a + s.p - 1};
    add_term(out, gimel.a, gimel.b, branch);
    const GameState shin{s.b, s.p + 1, s.a - 1};
    if (shin.is_absorbing()) break;
    if (shin.p == 2) {
      add_term(out, shin.a, shin.b, branch);
      break;
    }
    s = shin;
    weight = branch;
  }
  out.self_reference = p == 2 && !out.coefficient(a, b).is_zero();
  return out;
}

TCombination key_combination(int a, int b) {
  if (a < 1 || b < 1) throw Error(ErrorCode::kInvalidArgument, "key equation needs a, b >= 1");
  TCombination out;
  out.line_total = a + b;
  for (int i = 0; i <= std::min(2 * a - 2, 2 * b - 1); ++i) out.constant += Rational::power_of_two(-i);
  for (int i = 1; i <= std::min(a, b); ++i) add_term(out, b - i, a + i, Rational::power_of_two(1 - 2 * i));
  for (int i = 2; i <= std::min(a, b + 1); ++i) add_term(out, a - i, b + i, Rational::power_of_two(2 - 2 * i));
  out.self_reference = !out.coefficient(a, b).is_zero();
  return out;
}

Rational key_rhs(int a, int b, const TLookup& lookup) {
  const TCombination c = key_combination(a, b);
  Rational total = c.constant;
  for (const auto& [xy, coeff] : c.terms) {
    const auto value = lookup(xy.first, xy.second);
    if (!value) {
      throw Error(ErrorCode::kMissingValue, "no T value for (" + std::to_string(xy.first) + "," +
                                                std::to_string(xy.second) + ")");
    }
    total += coeff * *value;
  }
  return total;
}

KeyReport verify_key(int max_line_total, SpinSolver& solver) {
  if (max_line_total < 2) throw Error(ErrorCode::kInvalidArgument, "max line total must be >= 2");
  KeyReport report;
  report.max_line_total = max_line_total;
  for (int m = 2; m <= max_line_total; ++m) {
    const auto table = solver.table(Game::kSimplified, m + 2, SolveMode::kExact);
    const TLookup lookup = [&table](int x, int y) -> std::optional<Rational> {
      return table->value({x, 2, y}).exact();
    };
    bool ok = true;
    for (int a = 1; a <= m - 1; ++a) {
      const int b = m - a;
      const Rational chain = table->value({a, 2, b}).exact();
      const Rational key = key_rhs(a, b, lookup);
      ++report.checked;
      if (chain != key) {
        ok = false;
        const Rational gap = (chain - key).abs();
        if (gap > report.worst_discrepancy) report.worst_discrepancy = gap;
        report.violations.push_back({a, b, chain, key});
      }
    }
    report.line_passed[m] = ok;
  }
  return report;
}

ReducedSolution reduced_solve_T(int line_total, SpinSolver* fallback) {
  if (line_total < 2) throw Error(ErrorCode::kInvalidArgument, "line total must be >= 2");
  const int n = line_total - 1;
  RationalMatrix matrix(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  std::vector<Rational> rhs(static_cast<std::size_t>(n));
  for (int a = 1; a <= n; ++a) {
    const auto row = static_cast<std::size_t>(a - 1);
    const TCombination c = key_combination(a, line_total - a);
    matrix[row][row] = 1;
    for (const auto& [xy, coeff] : c.terms) {
      matrix[row][static_cast<std::size_t>(xy.first - 1)] -= coeff;
    }
    rhs[row] = c.constant;
  }

  ReducedSolution out;
  out.line_total = line_total;
  try {
    out.values = solve_dense_exact(matrix, rhs);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kSingular) throw;
    out.values = chain_line(line_total, fallback);
    out.used_chain_fallback = true;
  }
  return out;
}

std::string to_json(const TCombination& combination) {
  nlohmann::ordered_json j;
  j["const"] = combination.constant.to_string();
  nlohmann::ordered_json terms = nlohmann::ordered_json::object();
  for (const auto& [xy, coeff] : combination.terms) {
    terms[std::to_string(xy.first) + "," + std::to_string(xy.second)] = coeff.to_string();
  }
  j["terms"] = terms;
  return j.dump();
}

}  // namespace dreidel
