#pragma once

#include <optional>
#include <string_view>

#include "dreidel/chain/state.hpp"

namespace dreidel {

/// Dreidel rule sets. The simplified game only has gimel and shin, each with
/// probability 1/2; the full game has all four faces at 1/4.
enum class Game { kSimplified, kFull };

std::string_view to_string(Game game);
std::optional<Game> parse_game(std::string_view name);

/// Successor of a transition, or nullopt if either player is out of nuts.
std::optional<GameState> settle(GameState next);

/// gimel -> (b-1, 2, a+p-1); shin -> (b, p+1, a-1).
TransitionLaw<GameState> simplified_transitions(const GameState& s);

/// gimel -> (b-1, 2, a+p-1); hay -> (b, p - floor(p/2), a + floor(p/2));
/// nun -> (b, p, a); shin -> (b, p+1, a-1).
TransitionLaw<GameState> full_transitions(const GameState& s);

/// Dispatches on the game. Throws kInvalidArgument for absorbing or invalid
/// states.
TransitionLaw<GameState> transitions(Game game, const GameState& s);

}  // namespace dreidel
