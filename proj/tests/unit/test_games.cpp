#include "doctest.h"
#include "json.hpp"

#include "dreidel/error.hpp"
#include "dreidel/games/gambler.hpp"
#include "dreidel/games/rules.hpp"
#include "dreidel/games/simulate.hpp"

using namespace dreidel;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

using Expected = std::vector<std::pair<Rational, std::optional<GameState>>>;

void check_law(const TransitionLaw<GameState>& law, const Expected& expected) {
  REQUIRE(law.branches.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(law.branches[i].probability == expected[i].first);
    CHECK(law.branches[i].successor == expected[i].second);
  }
}

}  // namespace

TEST_SUITE("games") {

TEST_CASE("simplified transitions") {
  check_law(simplified_transitions({2, 2, 2}), {{q(1, 2), GameState{1, 2, 3}}, {q(1, 2), GameState{2, 3, 1}}});
  check_law(simplified_transitions({1, 1, 4}), {{q(1, 2), GameState{3, 2, 1}}, {q(1, 2), std::nullopt}});
  check_law(simplified_transitions({1, 4, 1}), {{q(1, 2), std::nullopt}, {q(1, 2), std::nullopt}});
  CHECK_THROWS_AS(simplified_transitions({0, 2, 3}), Error);
  CHECK_THROWS_AS(simplified_transitions({2, -1, 3}), Error);
}

TEST_CASE("full transitions") {
  check_law(full_transitions({1, 1, 1}), {{q(1, 4), std::nullopt},
                                          {q(1, 4), GameState{1, 1, 1}},
                                          {q(1, 4), GameState{1, 1, 1}},
                                          {q(1, 4), std::nullopt}});
  check_law(full_transitions({1, 2, 1}), {{q(1, 4), std::nullopt},
                                          {q(1, 4), GameState{1, 1, 2}},
                                          {q(1, 4), GameState{1, 2, 1}},
                                          {q(1, 4), std::nullopt}});
  CHECK(full_transitions({3, 5, 2}).branches[1].successor == GameState{2, 3, 5});
  CHECK_THROWS_AS(full_transitions({3, 5, 0}), Error);
}

TEST_CASE("hay never empties the pot and nun is an involution") {
  for (int n = 3; n <= 25; ++n) {
    for (int a = 1; a < n; ++a) {
      for (int p = 1; a + p < n; ++p) {
        const GameState s{a, p, n - a - p};
        const auto law = full_transitions(s);
        const auto& hay = law.branches[1].successor;
        REQUIRE(hay);
        CHECK(hay->p == (p + 1) / 2);
        CHECK(hay->p >= 1);
        const auto nun = law.branches[2].successor;
        REQUIRE(nun);
        CHECK(full_transitions(*nun).branches[2].successor == s);
      }
    }
  }
}

TEST_CASE("gambler transitions and closed form") {
  {
    const auto law = gambler_transitions(0, {1, 1, 0});
    CHECK_FALSE(law.branches[0].successor.has_value());
    CHECK_FALSE(law.branches[1].successor.has_value());
  }
  {
    const auto law = gambler_transitions(1, {3, 2, 1});
    CHECK(law.branches[0].successor == 2);
    CHECK(law.branches[1].successor == 0);
    CHECK(law.total_probability() == q(1));
  }
  CHECK_THROWS_AS(gambler_transitions(3, {3, 2, 1}), Error);
  CHECK(gambler_closed_form({5, 5, 5}) == q(0));
  CHECK(gambler_closed_form({5, 5, 0}) == q(25));
  CHECK(gambler_closed_form({4, 2, 1}) == q(9));
  CHECK_THROWS_AS(GamblerParams({0, 2, 0}).validate(), Error);
  CHECK_THROWS_AS(GamblerParams({3, 2, 4}).validate(), Error);
}

TEST_CASE("chain solver equals the gambler closed form") {
  for (int m = 1; m <= 20; ++m) {
    for (int n = 1; n <= 20; ++n) {
      const auto chain = gambler_chain_expectations(m, n);
      REQUIRE(chain.size() == static_cast<std::size_t>(m + n + 1));
      for (int a = -n; a <= m; ++a) {
        CHECK(chain[static_cast<std::size_t>(a + n)] == gambler_closed_form({m, n, a}));
      }
    }
  }
}

TEST_CASE("simulation is reproducible and self-consistent") {
  SimOptions options;
  options.trials = 2000;
  options.seed = 42;
  const SimResult first = simulate(Game::kSimplified, {2, 2, 2}, options);
  const SimResult second = simulate(Game::kSimplified, {2, 2, 2}, options);
  CHECK(first.histogram == second.histogram);
  CHECK(first.mean == second.mean);
  std::uint64_t count = 0;
  Rational sum = 0;
  for (const auto& [len, c] : first.histogram) {
    count += c;
    sum += Rational(len) * Rational(c);
  }
  CHECK(count == options.trials);
  CHECK((first.mean - BigFloat(sum / Rational(count))).abs() < BigFloat::power_of_ten(-60));
  options.seed = 43;
  CHECK(simulate(Game::kSimplified, {2, 2, 2}, options).histogram != first.histogram);
  CHECK(trial_seed(1, 0) != trial_seed(1, 1));
  CHECK(trial_seed(1, 5) == trial_seed(1, 5));
}

TEST_CASE("simulation statistics land near exact values") {
  SimOptions options;
  options.trials = 20000;
  options.seed = 7;
  const auto within = [](const SimResult& r, double target) {
    return std::abs(r.mean.to_double() - target) <= 4.0 * r.standard_error.to_double();
  };
  CHECK(within(simulate(Game::kSimplified, {2, 2, 2}, options), 3.0));
  CHECK(within(simulate(Game::kFull, {1, 1, 1}, options), 2.0));
  CHECK(within(simulate_gambler({5, 5, 0}, options), 25.0));
  const SimResult one = simulate(Game::kSimplified, {1, 4, 1}, options);
  CHECK(one.histogram.size() == 1);
  CHECK(one.standard_error.is_zero());
}

TEST_CASE("simulation errors and serialization") {
  SimOptions options;
  options.trials = 0;
  CHECK_THROWS_AS(simulate(Game::kSimplified, {2, 2, 2}, options), Error);
  options.trials = 1;
  CHECK_THROWS_AS(simulate(Game::kSimplified, {0, 2, 2}, options), Error);
  options.trials = 10;
  options.spin_cap = 1;
  try {
    simulate(Game::kSimplified, {5, 2, 5}, options);
    FAIL("expected spin cap");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSpinCapExceeded);
  }
  options.spin_cap = 1000;
  options.seed = 3;
  const auto j = nlohmann::json::parse(to_json(simulate(Game::kFull, {2, 2, 2}, options)));
  CHECK(j.at("trials") == 10);
  CHECK(j.at("seed") == 3);
  CHECK(j.at("mean").is_string());
  CHECK(j.at("stderr").is_string());
  CHECK(j.at("histogram").is_object());
}

}  // TEST_SUITE
