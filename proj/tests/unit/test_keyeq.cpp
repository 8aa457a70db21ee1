#include <algorithm>

#include "doctest.h"
#include "json.hpp"

#include "dreidel/chain/spin_table.hpp"
#include "dreidel/error.hpp"
#include "dreidel/keyeq/keyeq.hpp"

using namespace dreidel;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

// Coefficients read straight off the three sums of the Key identity.
std::pair<Rational, std::map<std::pair<int, int>, Rational>> key_oracle(int a, int b) {
  Rational constant = 0;
  for (int i = 0; i <= std::min(2 * a - 2, 2 * b - 1); ++i) constant += Rational::power_of_two(-i);
  std::map<std::pair<int, int>, Rational> terms;
  for (int i = 1; i <= std::min(a, b); ++i) {
    if (b - i > 0) terms[{b - i, a + i}] += Rational::power_of_two(1 - 2 * i);
  }
  for (int i = 2; i <= std::min(a, b + 1); ++i) {
    if (a - i > 0) terms[{a - i, b + i}] += Rational::power_of_two(2 - 2 * i);
  }
  return {constant, terms};
}

bool is_dyadic(const Rational& r) {
  mpz_class d = r.denominator();
  return (d & (d - 1)) == 0;
}

Rational chain_T(SpinSolver& solver, int x, int y) {
  return solver.expected_spins(Game::kSimplified, {x, 2, y}, SolveMode::kExact).exact();
}

}  // namespace

TEST_SUITE("keyeq") {

TEST_CASE("shin chain expansion worked examples") {
  {
    const auto c = expand_shin_chain(2, 2, 2);
    CHECK(c.constant == q(7, 4));
    CHECK(c.terms == std::map<std::pair<int, int>, Rational>{{{1, 3}, q(1, 2)}});
    CHECK_FALSE(c.self_reference);
  }
  {
    const auto c = expand_shin_chain(3, 2, 1);
    CHECK(c.constant == q(3, 2));
    CHECK(c.terms == std::map<std::pair<int, int>, Rational>{{{1, 3}, q(1, 4)}});
  }
  {
    const auto c = expand_shin_chain(1, 2, 3);
    CHECK(c.constant == q(1));
    CHECK(c.terms == std::map<std::pair<int, int>, Rational>{{{2, 2}, q(1, 2)}});
  }
  {
    const auto c = expand_shin_chain(1, 2, 2);
    CHECK(c.self_reference);
    CHECK(c.coefficient(1, 2) == q(1, 2));
  }
  CHECK_THROWS_AS(expand_shin_chain(0, 2, 2), Error);
  CHECK_THROWS_AS(expand_shin_chain(1, -1, 2), Error);
}

TEST_CASE("expansion reproduces the Key coefficients") {
  for (int a = 1; a <= 12; ++a) {
    for (int b = 1; b <= 12; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      const auto [constant, terms] = key_oracle(a, b);
      const auto expanded = expand_shin_chain(a, 2, b);
      CHECK(expanded.constant == constant);
      CHECK(expanded.terms == terms);
      const auto key = key_combination(a, b);
      CHECK(key.constant == constant);
      CHECK(key.terms == terms);
      CHECK(expanded.line_total == a + b);
      for (const auto& [xy, coeff] : expanded.terms) {
        CHECK(xy.first + xy.second == a + b);
        CHECK(xy.first > 0);
        CHECK(xy.second > 0);
        CHECK(is_dyadic(coeff));
      }
    }
  }
}

TEST_CASE("expansion equals chain values for every pot") {
  SpinSolver solver;
  for (int n = 2; n <= 20; ++n) {
    for (int a = 1; a < n; ++a) {
      for (int p = 0; a + p < n; ++p) {
        const int b = n - a - p;
        const auto c = expand_shin_chain(a, p, b);
        Rational value = c.constant;
        for (const auto& [xy, coeff] : c.terms) value += coeff * chain_T(solver, xy.first, xy.second);
        CHECK(value == solver.expected_spins(Game::kSimplified, {a, p, b}, SolveMode::kExact).exact());
      }
    }
  }
}

TEST_CASE("key_rhs examples") {
  const TLookup lookup = [](int x, int y) -> std::optional<Rational> {
    if (x == 1 && y == 3) return q(5, 2);
    if (x == 2 && y == 2) return q(3);
    return std::nullopt;
  };
  CHECK(key_rhs(2, 2, lookup) == q(3));
  CHECK(key_rhs(3, 1, lookup) == q(17, 8));
  CHECK(key_rhs(1, 1, [](int, int) { return std::nullopt; }) == q(1));
  try {
    key_rhs(1, 3, [](int, int) { return std::nullopt; });
    FAIL("expected missing value");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMissingValue);
  }
}

TEST_CASE("verify_key on small lines") {
  SpinSolver solver;
  for (int m : {4, 6, 16}) {
    const auto report = verify_key(m, solver);
    CHECK(report.passed());
    CHECK(report.checked == static_cast<std::size_t>(m * (m - 1) / 2));
    CHECK(report.line_passed.size() == static_cast<std::size_t>(m - 1));
    CHECK(report.worst_discrepancy == q(0));
  }
  CHECK_THROWS_AS(verify_key(1, solver), Error);
}

TEST_CASE("reduced line solve matches the chain solver") {
  CHECK(reduced_solve_T(2).values == std::vector<Rational>{q(1)});
  CHECK(reduced_solve_T(4).values == std::vector<Rational>{q(5, 2), q(3), q(17, 8)});
  SpinSolver solver;
  for (int m = 2; m <= 20; ++m) {
    const auto line = reduced_solve_T(m);
    CHECK_FALSE(line.used_chain_fallback);
    for (int a = 1; a < m; ++a) CHECK(line.at(a) == chain_T(solver, a, m - a));
  }
  CHECK_THROWS_AS(reduced_solve_T(1), Error);
}

TEST_CASE("combination serialization") {
  const auto j = nlohmann::json::parse(to_json(expand_shin_chain(2, 2, 2)));
  CHECK(j.at("const") == "7/4");
  CHECK(j.at("terms").at("1,3") == "1/2");
}

}  // TEST_SUITE
