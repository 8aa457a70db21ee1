#include "dreidel/games/rules.hpp"

#include "dreidel/error.hpp"

namespace dreidel {
namespace {

void require_live(const GameState& s) {
  if (!s.is_valid()) throw Error(ErrorCode::kInvalidArgument, "invalid state " + to_string(s));
  if (s.is_absorbing()) {
    throw Error(ErrorCode::kInvalidArgument, "state " + to_string(s) + " is absorbing");
  }
}

}  // namespace

std::string_view to_string(Game game) {
  switch (game) {
    case Game::kSimplified: return "simplified";
    case Game::kFull: return "full";
  }
  return "?";
}

std::optional<Game> parse_game(std::string_view name) {
  if (name == "simplified") return Game::kSimplified;
  if (name == "full") return Game::kFull;
  return std::nullopt;
}

std::optional<GameState> settle(GameState next) {
  if (next.is_absorbing()) return std::nullopt;
  return next;
}

TransitionLaw<GameState> simplified_transitions(const GameState& s) {
  require_live(s);
  const Rational half(1, 2);
  return {{
      {half, settle({s.b - 1, 2, s.a + s.p - 1})},  // gimel, then both re-ante
      {half, settle({s.b, s.p + 1, s.a - 1})},      // shin
  }};
}

TransitionLaw<GameState> full_transitions(const GameState& s) {
  require_live(s);
  const Rational quarter(1, 4);
  const int taken = s.p / 2;
  return {{
      {quarter, settle({s.b - 1, 2, s.a + s.p - 1})},     // gimel
      {quarter, settle({s.b, s.p - taken, s.a + taken})},  // hay
      {quarter, settle({s.b, s.p, s.a})},                  // nun
      {quarter, settle({s.b, s.p + 1, s.a - 1})},          // shin
  }};
}

TransitionLaw<GameState> transitions(Game game, const GameState& s) {
  switch (game) {
    case Game::kSimplified: return simplified_transitions(s);
    case Game::kFull: return full_transitions(s);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown game");
}

}  // namespace dreidel
