#include "dreidel/chain/solve.hpp"

#include <limits>
#include <map>
#include <set>

#include "dreidel/error.hpp"

namespace dreidel {

std::vector<Rational> solve_exact(const SparseSystem& system) {
  const std::size_t n = system.size();
  std::vector<std::map<std::size_t, Rational>> rows(n);
  std::vector<std::set<std::size_t>> column_rows(n);
  std::vector<Rational> rhs(n, Rational(1));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : system.rows[i]) {
      if (e.column >= n) throw Error(ErrorCode::kInvalidArgument, "column index out of range");
      rows[i][e.column] += e.value;
    }
    std::erase_if(rows[i], [](const auto& kv) { return kv.second.is_zero(); });
    for (const auto& [j, v] : rows[i]) column_rows[j].insert(i);
  }

  std::vector<bool> column_done(n, false);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column)
  pivots.reserve(n);

  for (std::size_t step = 0; step < n; ++step) {
    std::size_t col = n;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t j = 0; j < n; ++j) {
      if (!column_done[j] && column_rows[j].size() < best) {
        best = column_rows[j].size();
        col = j;
      }
    }
    if (best == 0) throw Error(ErrorCode::kSingular, "zero pivot column in exact elimination");

    std::size_t row = n;
    std::size_t shortest = std::numeric_limits<std::size_t>::max();
    for (std::size_t i : column_rows[col]) {
      if (rows[i].size() < shortest) {
        shortest = rows[i].size();
        row = i;
      }
    }

    column_done[col] = true;
    pivots.emplace_back(row, col);
    for (const auto& [j, v] : rows[row]) column_rows[j].erase(row);

    const Rational pivot = rows[row].at(col);
    const std::vector<std::size_t> targets(column_rows[col].begin(), column_rows[col].end());
    for (std::size_t i : targets) {
      auto& target = rows[i];
      const Rational factor = target.at(col) / pivot;
      for (const auto& [j, v] : rows[row]) {
        auto [it, inserted] = target.try_emplace(j, Rational(0));
        it->second -= factor * v;
        if (it->second.is_zero()) {
          target.erase(it);
          column_rows[j].erase(i);
        } else if (inserted) {
          column_rows[j].insert(i);
        }
      }
      rhs[i] -= factor * rhs[row];
    }
  }

  // Each pivot row only references columns pivoted after it.
  std::vector<Rational> x(n);
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const auto [row, col] = *it;
    Rational acc = rhs[row];
    for (const auto& [j, v] : rows[row]) {
      if (j != col) acc -= v * x[j];
    }
    x[col] = acc / rows[row].at(col);
  }
  return x;
}

}  // namespace dreidel
