#include "dreidel/chain/spin_table.hpp"

#include "dreidel/chain/system.hpp"
#include "dreidel/error.hpp"

namespace dreidel {

std::string_view to_string(SolveMode mode) {
  return mode == SolveMode::kExact ? "exact" : "hiprec";
}

std::optional<SolveMode> parse_solve_mode(std::string_view name) {
  if (name == "exact") return SolveMode::kExact;
  if (name == "hiprec") return SolveMode::kHighPrecision;
  return std::nullopt;
}

Number SpinTable::value(const GameState& s) const {
  if (!s.is_valid()) throw Error(ErrorCode::kInvalidArgument, "invalid state " + to_string(s));
  if (s.is_absorbing()) return Number(0);
  if (s.total() != total) {
    throw Error(ErrorCode::kInvalidArgument,
                "state " + to_string(s) + " is not in the table for total " + std::to_string(total));
  }
  return values[state_index(s)];
}

SpinTable solve_table(Game game, int total, SolveMode mode, const HiprecOptions& options) {
  const DreidelSystem built = build_system(game, total);
  SpinTable table;
  table.game = game;
  table.total = total;
  table.mode = mode;
  table.states = built.states;
  table.values.reserve(built.states.size());
  if (mode == SolveMode::kExact) {
    for (auto& v : solve_exact(built.system)) table.values.emplace_back(std::move(v));
  } else {
    HiprecSolution sol = solve_hiprec(built.system, options);
    table.precision_bits = options.precision_bits;
    table.tolerance = options.tolerance;
    table.error_bound = sol.error_bound;
    for (auto& v : sol.values) table.values.emplace_back(std::move(v));
  }
  return table;
}

SpinSolver::SpinSolver(HiprecOptions options) : options_(std::move(options)) {}

std::shared_ptr<const SpinTable> SpinSolver::table(Game game, int total, SolveMode mode) {
  const TableKey key{game, total, mode};
  {
    std::lock_guard lock(mutex_);
    if (auto it = tables_.find(key); it != tables_.end()) return it->second;
  }
  auto solved = std::make_shared<const SpinTable>(solve_table(game, total, mode, options_));
  std::lock_guard lock(mutex_);
  ++solves_;
  return tables_.try_emplace(key, std::move(solved)).first->second;
}

Number SpinSolver::expected_spins(Game game, const GameState& s, SolveMode mode) {
  if (!s.is_valid()) throw Error(ErrorCode::kInvalidArgument, "invalid state " + to_string(s));
  if (s.is_absorbing()) return Number(0);
  {
    std::lock_guard lock(mutex_);
    if (auto it = preloaded_.find({game, mode, s}); it != preloaded_.end()) return it->second;
  }
  return table(game, s.total(), mode)->value(s);
}

void SpinSolver::preload(const SpinRecord& record) {
  std::lock_guard lock(mutex_);
  preloaded_.insert_or_assign({record.game, record.mode, record.state}, record.value);
}

std::size_t SpinSolver::solves_performed() const {
  std::lock_guard lock(mutex_);
  return solves_;
}

}  // namespace dreidel
