#include <algorithm>

#include "doctest.h"

#include "dreidel/chain/solve.hpp"
#include "dreidel/chain/spin_table.hpp"
#include "dreidel/chain/system.hpp"
#include "dreidel/error.hpp"
#include "dreidel/games/rules.hpp"

using namespace dreidel;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

Rational entry(const SparseSystem& sys, std::size_t row, std::size_t col) {
  for (const auto& e : sys.rows[row]) {
    if (e.column == col) return e.value;
  }
  return 0;
}

std::size_t position(const std::vector<GameState>& states, const GameState& s) {
  return static_cast<std::size_t>(std::find(states.begin(), states.end(), s) - states.begin());
}

}  // namespace

TEST_SUITE("chain") {

TEST_CASE("enumerate_states small totals") {
  CHECK(enumerate_states(2) == std::vector<GameState>{{1, 0, 1}});
  CHECK(enumerate_states(3) == std::vector<GameState>{{1, 0, 2}, {1, 1, 1}, {2, 0, 1}});
  const auto six = enumerate_states(6);
  CHECK(six.size() == 15);
  CHECK(std::count_if(six.begin(), six.end(), [](const GameState& s) { return s.p >= 1; }) == 10);
  CHECK(std::is_sorted(six.begin(), six.end()));
  CHECK_THROWS_AS(enumerate_states(1), Error);
  for (int n = 2; n <= 30; ++n) {
    const auto states = enumerate_states(n);
    CHECK(states.size() == static_cast<std::size_t>(n * (n - 1) / 2));
    for (std::size_t i = 0; i < states.size(); ++i) CHECK(state_index(states[i]) == i);
  }
}

TEST_CASE("conservation and normalization of both rule sets") {
  for (Game game : {Game::kSimplified, Game::kFull}) {
    for (int n = 2; n <= 30; ++n) {
      for (const auto& s : enumerate_states(n)) {
        const auto law = transitions(game, s);
        CHECK(law.total_probability() == q(1));
        for (const auto& br : law.branches) {
          CHECK(br.probability > q(0));
          if (br.successor) {
            CHECK(br.successor->total() == n);
            CHECK_FALSE(br.successor->is_absorbing());
          }
        }
      }
    }
  }
}

TEST_CASE("build_system rows") {
  {
    const auto sys = build_system(Game::kSimplified, 6);
    const std::size_t i = position(sys.states, {1, 4, 1});
    REQUIRE(sys.system.rows[i].size() == 1);
    CHECK(entry(sys.system, i, i) == q(1));
  }
  {
    const auto sys = build_system(Game::kSimplified, 5);
    const std::size_t i = position(sys.states, {1, 2, 2});
    REQUIRE(sys.system.rows[i].size() == 1);
    CHECK(entry(sys.system, i, i) == q(1, 2));
  }
  {
    const auto sys = build_system(Game::kFull, 3);
    const std::size_t i = position(sys.states, {1, 1, 1});
    REQUIRE(sys.system.rows[i].size() == 1);
    CHECK(entry(sys.system, i, i) == q(1, 2));
  }
}

TEST_CASE("exact solve reproduces the total-6 table") {
  const auto table = solve_table(Game::kSimplified, 6, SolveMode::kExact);
  const std::vector<std::pair<GameState, Rational>> expected{
      {{1, 1, 4}, q(33, 16)}, {{1, 2, 3}, q(5, 2)}, {{1, 3, 2}, q(9, 4)}, {{1, 4, 1}, q(1)},
      {{2, 1, 3}, q(57, 16)}, {{2, 2, 2}, q(3)},    {{2, 3, 1}, q(3, 2)}, {{3, 1, 2}, q(15, 4)},
      {{3, 2, 1}, q(17, 8)},  {{4, 1, 1}, q(9, 4)}};
  for (const auto& [s, v] : expected) {
    CAPTURE(s);
    CHECK(table.value(s) == Number(v));
  }
  CHECK(table.value({0, 7, 5}) == Number(0));
}

TEST_CASE("small hand-solved values") {
  SpinSolver solver;
  CHECK(solver.expected_spins(Game::kSimplified, {1, 0, 1}, SolveMode::kExact) == Number(1));
  CHECK(solver.expected_spins(Game::kSimplified, {1, 2, 2}, SolveMode::kExact) == Number(2));
  CHECK(solver.expected_spins(Game::kSimplified, {0, 7, 5}, SolveMode::kExact) == Number(0));
  CHECK(solver.expected_spins(Game::kFull, {1, 1, 1}, SolveMode::kExact) == Number(2));
  CHECK(solver.expected_spins(Game::kFull, {1, 2, 1}, SolveMode::kExact) == Number(q(12, 5)));
  const Number hp = solver.expected_spins(Game::kFull, {1, 2, 1}, SolveMode::kHighPrecision);
  CHECK((hp - Number(q(12, 5))).abs() <= Number(BigFloat::power_of_ten(-28)));
}

TEST_CASE("exact residual is zero and values are at least one") {
  for (Game game : {Game::kSimplified, Game::kFull}) {
    for (int n = 2; n <= 14; ++n) {
      const auto sys = build_system(game, n);
      const auto x = solve_exact(sys.system);
      for (std::size_t i = 0; i < x.size(); ++i) {
        Rational lhs = 0;
        for (const auto& e : sys.system.rows[i]) lhs += e.value * x[e.column];
        CHECK(lhs == q(1));
        CHECK(x[i] >= q(1));
      }
    }
  }
}

TEST_CASE("simplified states with both branches absorbing take exactly one spin") {
  for (int n = 2; n <= 20; ++n) {
    const auto table = solve_table(Game::kSimplified, n, SolveMode::kExact);
    for (std::size_t i = 0; i < table.states.size(); ++i) {
      const auto law = simplified_transitions(table.states[i]);
      const bool both_absorb = std::none_of(law.branches.begin(), law.branches.end(),
                                            [](const auto& br) { return br.successor.has_value(); });
      if (both_absorb) CHECK(table.values[i] == Number(1));
    }
  }
}

TEST_CASE("exact and high-precision agree within the reported bound") {
  for (Game game : {Game::kSimplified, Game::kFull}) {
    for (int n = 2; n <= 20; ++n) {
      const auto exact = solve_table(game, n, SolveMode::kExact);
      const auto hp = solve_table(game, n, SolveMode::kHighPrecision);
      REQUIRE(hp.error_bound);
      CHECK(*hp.error_bound > BigFloat(0.0));
      for (std::size_t i = 0; i < exact.values.size(); ++i) {
        const BigFloat diff = (hp.values[i].approx() - BigFloat(exact.values[i].exact(), 512)).abs();
        CHECK(diff <= *hp.error_bound);
      }
    }
  }
}

TEST_CASE("gauss-seidel option converges on small systems") {
  HiprecOptions options;
  options.method = HiprecMethod::kGaussSeidel;
  for (int n : {3, 6, 10}) {
    const auto sys = build_system(Game::kSimplified, n);
    const auto exact = solve_exact(sys.system);
    const auto hp = solve_hiprec(sys.system, options);
    CHECK(hp.residual_norm <= options.tolerance);
    for (std::size_t i = 0; i < exact.size(); ++i) {
      CHECK((hp.values[i] - BigFloat(exact[i])).abs() <= hp.error_bound);
    }
  }
}

TEST_CASE("high-precision preconditions") {
  const auto sys = build_system(Game::kSimplified, 6);
  HiprecOptions low;
  low.precision_bits = 64;
  CHECK_THROWS_AS(solve_hiprec(sys.system, low), Error);
  HiprecOptions zero_tol;
  zero_tol.tolerance = BigFloat(0.0);
  CHECK_THROWS_AS(solve_hiprec(sys.system, zero_tol), Error);
  HiprecOptions capped;
  capped.method = HiprecMethod::kGaussSeidel;
  capped.max_iterations = 2;
  try {
    solve_hiprec(build_system(Game::kSimplified, 12).system, capped);
    FAIL("expected no convergence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNoConvergence);
  }
}

TEST_CASE("spin solver caches tables and answers are call-order independent") {
  SpinSolver first;
  SpinSolver second;
  const std::vector<GameState> states{{2, 2, 3}, {1, 4, 1}, {3, 0, 4}, {2, 2, 3}};
  std::vector<Number> forward;
  for (const auto& s : states) forward.push_back(first.expected_spins(Game::kSimplified, s, SolveMode::kExact));
  CHECK(first.solves_performed() == 2);
  for (std::size_t i = states.size(); i-- > 0;) {
    CHECK(second.expected_spins(Game::kSimplified, states[i], SolveMode::kExact) == forward[i]);
  }
  const auto t1 = first.table(Game::kFull, 9, SolveMode::kHighPrecision);
  const auto t2 = first.table(Game::kFull, 9, SolveMode::kHighPrecision);
  CHECK(t1 == t2);
  const auto again = second.table(Game::kFull, 9, SolveMode::kHighPrecision);
  for (std::size_t i = 0; i < t1->values.size(); ++i) CHECK(t1->values[i].approx() == again->values[i].approx());
}

}  // TEST_SUITE
