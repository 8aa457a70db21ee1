#include "dreidel/chain/system.hpp"

namespace dreidel {

std::size_t SparseSystem::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : rows) n += row.size();
  return n;
}

std::vector<GameState> enumerate_states(int total) {
  if (total < 2) {
    throw Error(ErrorCode::kEmptyDomain,
                "no transient states with a+p+b = " + std::to_string(total));
  }
  std::vector<GameState> states;
  states.reserve(static_cast<std::size_t>(total) * static_cast<std::size_t>(total - 1) / 2);
  for (int a = 1; a <= total - 1; ++a) {
    for (int p = 0; p <= total - a - 1; ++p) states.push_back({a, p, total - a - p});
  }
  return states;
}

std::size_t state_index(const GameState& s) {
  if (!s.is_valid() || s.is_absorbing()) {
    throw Error(ErrorCode::kInvalidArgument, "state " + to_string(s) + " is not transient");
  }
  // Rows for a' < a contribute (total - a') states each.
  const std::size_t n = static_cast<std::size_t>(s.total());
  const std::size_t a = static_cast<std::size_t>(s.a);
  const std::size_t before = (a - 1) * n - (a - 1) * a / 2;
  return before + static_cast<std::size_t>(s.p);
}

DreidelSystem build_system(Game game, int total) {
  DreidelSystem out{game, total, enumerate_states(total), {}};
  out.system = assemble_system<GameState>(
      out.states, [game](const GameState& s) { return transitions(game, s); },
      [](const GameState& s) { return state_index(s); });
  return out;
}

}  // namespace dreidel
