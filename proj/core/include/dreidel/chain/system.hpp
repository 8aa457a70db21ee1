#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dreidel/arith/rational.hpp"
#include "dreidel/chain/state.hpp"
#include "dreidel/error.hpp"
#include "dreidel/games/rules.hpp"

namespace dreidel {

struct SparseEntry {
  std::size_t column;
  Rational value;
};

/// Rows of (I - P) restricted to the transient states; the right-hand side
/// is implicitly all ones, so x is the vector of expected steps to
/// absorption. Off-diagonal entries are -probability; branches that land on
/// the same state are merged into one entry.
struct SparseSystem {
  std::vector<std::vector<SparseEntry>> rows;

  std::size_t size() const { return rows.size(); }
  std::size_t nonzeros() const;
};

/// Builds the system for an arbitrary chain. `rules(state)` yields a
/// TransitionLaw<State>; `index_of(state)` maps a transient state to its row.
template <class State, class Rules, class IndexOf>
SparseSystem assemble_system(std::span<const State> states, Rules&& rules, IndexOf&& index_of) {
  SparseSystem system;
  system.rows.resize(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    auto& row = system.rows[i];
    row.push_back({i, Rational(1)});
    for (const auto& branch : rules(states[i]).branches) {
      if (!branch.successor) continue;
      const std::size_t j = index_of(*branch.successor);
      bool merged = false;
      for (auto& entry : row) {
        if (entry.column == j) {
          entry.value -= branch.probability;
          merged = true;
          break;
        }
      }
      if (!merged) row.push_back({j, -branch.probability});
    }
    std::erase_if(row, [](const SparseEntry& e) { return e.value.is_zero(); });
  }
  return system;
}

/// All transient states with a + p + b = total, ordered lexicographically by
/// (a, p). States with p = 0 or 1 are included even though play from a
/// pot-2 start never reaches some of them. Throws kEmptyDomain for total < 2.
std::vector<GameState> enumerate_states(int total);

/// Position of a transient state in enumerate_states(s.total()).
std::size_t state_index(const GameState& s);

/// A Dreidel system together with its state ordering.
struct DreidelSystem {
  Game game;
  int total;
  std::vector<GameState> states;
  SparseSystem system;
};

DreidelSystem build_system(Game game, int total);

}  // namespace dreidel
