#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dreidel/arith/rational.hpp"
#include "dreidel/chain/spin_table.hpp"

namespace dreidel {

/// constant + sum coeff * T(x, y), where T(x, y) = D(x, 2, y) and every
/// (x, y) lies on the line x + y = line_total. Terms with x = 0 or y = 0 are
/// dropped because T vanishes there.
struct TCombination {
  int line_total = 0;
  Rational constant;
  std::map<std::pair<int, int>, Rational> terms;
  /// Set when the expansion of a pot-2 state refers back to that same state.
  bool self_reference = false;

  Rational coefficient(int x, int y) const;
};

/// Expresses D(a, p, b) through pot-2 values by unrolling the recurrence
/// along the all-shin path. Every gimel lands on a pot of 2 and becomes a T
/// term; a shin that lands on a pot of 2 does too; other shin successors are
/// expanded further. For p = 2 the root itself is expanded once, so the
/// result is the right-hand side of an equation for T(a, b) and may contain
/// T(a, b); self_reference records that case. Throws kInvalidArgument unless
/// a, b >= 1 and p >= 0.
TCombination expand_shin_chain(int a, int p, int b);

/// The closed-form expansion of T(a, b):
///   sum_{i=0}^{min(2a-2, 2b-1)} 2^-i
///   + sum_{i=1}^{min(a,b)}   T(b-i, a+i) / 2^(2i-1)
///   + sum_{i=2}^{min(a,b+1)} T(a-i, b+i) / 2^(2i-2)
TCombination key_combination(int a, int b);

using TLookup = std::function<std::optional<Rational>(int x, int y)>;

/// Evaluates key_combination(a, b) with T from `lookup`; boundary terms are
/// zero without consulting it. Throws kMissingValue for a missing entry.
Rational key_rhs(int a, int b, const TLookup& lookup);

struct KeyViolation {
  int a = 0;
  int b = 0;
  Rational chain_value;
  Rational key_value;
};

struct KeyReport {
  int max_line_total = 0;
  std::size_t checked = 0;
  std::map<int, bool> line_passed;
  std::vector<KeyViolation> violations;
  Rational worst_discrepancy;

  bool passed() const { return violations.empty(); }
};

/// Checks key_rhs(a, b) == T(a, b) exactly for all a, b >= 1 with
/// 2 <= a + b <= max_line_total, taking T from exact chain solves.
KeyReport verify_key(int max_line_total, SpinSolver& solver);

struct ReducedSolution {
  int line_total = 0;
  std::vector<Rational> values;  // T(a, m - a) at index a - 1
  bool used_chain_fallback = false;

  const Rational& at(int a) const { return values.at(static_cast<std::size_t>(a - 1)); }
};

/// Solves the (m-1) x (m-1) system T(a, m-a) = key_combination(a, m-a)
/// exactly. If that system is singular, falls back to the chain solver
/// (through `fallback` when given) and flags it.
ReducedSolution reduced_solve_T(int line_total, SpinSolver* fallback = nullptr);

/// {"const":"7/4","terms":{"1,3":"1/2"}}
std::string to_json(const TCombination& combination);

}  // namespace dreidel
