#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dreidel/arith/rational.hpp"

namespace dreidel {

/// (a, p, b): nuts of the player about to spin, nuts in the pot, nuts of the
/// waiting player. Every transition swaps the roles of the two players.
struct GameState {
  int a = 0;
  int p = 0;
  int b = 0;

  bool is_valid() const { return a >= 0 && p >= 0 && b >= 0; }
  bool is_absorbing() const { return a == 0 || b == 0; }
  int total() const { return a + p + b; }

  friend auto operator<=>(const GameState&, const GameState&) = default;
};

inline std::string to_string(const GameState& s) {
  return "(" + std::to_string(s.a) + "," + std::to_string(s.p) + "," + std::to_string(s.b) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const GameState& s) { return os << to_string(s); }

/// One outcome of a spin. An empty successor means the chain is absorbed.
template <class State>
struct Branch {
  Rational probability;
  std::optional<State> successor;
};

template <class State>
struct TransitionLaw {
  std::vector<Branch<State>> branches;

  Rational total_probability() const {
    Rational sum = 0;
    for (const auto& br : branches) sum += br.probability;
    return sum;
  }
};

}  // namespace dreidel
