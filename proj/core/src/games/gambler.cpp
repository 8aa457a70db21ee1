#include "dreidel/games/gambler.hpp"

#include "dreidel/chain/solve.hpp"
#include "dreidel/chain/system.hpp"
#include "dreidel/error.hpp"

namespace dreidel {

void GamblerParams::validate() const {
  if (win_at < 1 || ruin_at < 1) {
    throw Error(ErrorCode::kInvalidArgument, "gambler thresholds M and N must be at least 1");
  }
  if (start < -ruin_at || start > win_at) {
    throw Error(ErrorCode::kInvalidArgument, "gambler start must satisfy -N <= a <= M");
  }
}

TransitionLaw<int> gambler_transitions(int position, const GamblerParams& params) {
  GamblerParams at = params;
  at.start = position;
  at.validate();
  if (params.is_absorbing(position)) {
    throw Error(ErrorCode::kInvalidArgument, "gambler position is absorbing");
  }
  auto settle = [&params](int next) -> std::optional<int> {
    if (params.is_absorbing(next)) return std::nullopt;
    return next;
  };
  const Rational half(1, 2);
  return {{{half, settle(position + 1)}, {half, settle(position - 1)}}};
}

Rational gambler_closed_form(const GamblerParams& params) {
  params.validate();
  return Rational(params.ruin_at + params.start) * Rational(params.win_at - params.start);
}

std::vector<Rational> gambler_chain_expectations(int win_at, int ruin_at) {
  const GamblerParams params{win_at, ruin_at, 0};
  params.validate();
  std::vector<int> transient;
  for (int a = -ruin_at + 1; a <= win_at - 1; ++a) transient.push_back(a);

  std::vector<Rational> out(static_cast<std::size_t>(win_at + ruin_at + 1), Rational(0));
  if (transient.empty()) return out;
  const SparseSystem system = assemble_system<int>(
      transient, [&params](int a) { return gambler_transitions(a, params); },
      [ruin_at](int a) { return static_cast<std::size_t>(a + ruin_at - 1); });
  const auto x = solve_exact(system);
  for (std::size_t i = 0; i < transient.size(); ++i) {
    out[static_cast<std::size_t>(transient[i] + ruin_at)] = x[i];
  }
  return out;
}

}  // namespace dreidel
