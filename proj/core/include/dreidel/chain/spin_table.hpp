#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string_view>
#include <tuple>
#include <vector>

#include "dreidel/arith/number.hpp"
#include "dreidel/chain/solve.hpp"
#include "dreidel/chain/state.hpp"
#include "dreidel/games/rules.hpp"

namespace dreidel {

enum class SolveMode { kExact, kHighPrecision };

std::string_view to_string(SolveMode mode);
std::optional<SolveMode> parse_solve_mode(std::string_view name);

/// Expected number of spins for every transient state of one conserved total.
struct SpinTable {
  Game game = Game::kSimplified;
  int total = 0;
  SolveMode mode = SolveMode::kExact;
  long precision_bits = 0;           // 0 in exact mode
  std::optional<BigFloat> tolerance;  // set in high-precision mode
  std::optional<BigFloat> error_bound;
  std::vector<GameState> states;  // enumerate_states order
  std::vector<Number> values;

  /// Absorbing states yield 0. Throws kInvalidArgument for a state of a
  /// different total.
  Number value(const GameState& s) const;
};

SpinTable solve_table(Game game, int total, SolveMode mode, const HiprecOptions& options = {});

/// A single stored expectation, as read from or written to a cache file.
struct SpinRecord {
  Game game = Game::kSimplified;
  GameState state;
  SolveMode mode = SolveMode::kExact;
  Number value;
  int digits = 0;                      // significant digits of a hiprec value
  std::optional<BigFloat> error_bound;  // hiprec only
};

/// Solves totals on demand and memoizes per (game, total, mode). Values loaded
/// from a cache file via preload() answer expected_spins without any solve.
/// Safe for concurrent use; the maps are guarded by one mutex and solves run
/// outside it, so two threads may race to solve the same total, in which case
/// the first insert wins and both get the same deterministic table.
class SpinSolver {
 public:
  explicit SpinSolver(HiprecOptions options = {});

  std::shared_ptr<const SpinTable> table(Game game, int total, SolveMode mode);
  Number expected_spins(Game game, const GameState& s, SolveMode mode);

  void preload(const SpinRecord& record);
  std::size_t solves_performed() const;
  const HiprecOptions& options() const { return options_; }

 private:
  using TableKey = std::tuple<Game, int, SolveMode>;
  using RecordKey = std::tuple<Game, SolveMode, GameState>;

  HiprecOptions options_;
  mutable std::mutex mutex_;
  std::map<TableKey, std::shared_ptr<const SpinTable>> tables_;
  std::map<RecordKey, Number> preloaded_;
  std::size_t solves_ = 0;
};

}  // namespace dreidel
