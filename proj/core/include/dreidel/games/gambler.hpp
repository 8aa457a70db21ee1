#pragma once

#include <vector>

#include "dreidel/arith/rational.hpp"
#include "dreidel/chain/state.hpp"

namespace dreidel {

/// Fair +/-1 walk started at `start`, absorbed on reaching +win_at or
/// -ruin_at.
struct GamblerParams {
  int win_at = 1;   // M
  int ruin_at = 1;  // N
  int start = 0;    // a, with -N <= a <= M

  void validate() const;
  bool is_absorbing(int position) const { return position == win_at || position == -ruin_at; }
};

/// [1/2 -> a+1, 1/2 -> a-1] with absorbing endpoints reported as empty
/// successors. Throws kInvalidArgument unless -N < position < M.
TransitionLaw<int> gambler_transitions(int position, const GamblerParams& params);

/// (N + a)(M - a).
Rational gambler_closed_form(const GamblerParams& params);

/// Expected duration from every position -N..M (index position + N) via the
/// generic absorbing-chain solver.
std::vector<Rational> gambler_chain_expectations(int win_at, int ruin_at);

}  // namespace dreidel
