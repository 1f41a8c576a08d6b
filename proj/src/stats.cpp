#include "tabcrys/stats.hpp"

#include <algorithm>

#include "tabcrys/crystal.hpp"
#include "tabcrys/lr.hpp"

namespace tabcrys {

Frac delta(const Tableau& U, int eps) {
  assert(valid_eps(eps));
  const Partition& mu = U.inner();
  // Cells sorted by column; a chain moves to strictly larger columns, weakly
  // smaller rows, weakly smaller entries. dp holds mu_(first row) + 2*length.
  std::vector<CellRef> cells = U.reading_cells(true);
  std::vector<long long> dp(cells.size(), 0);
  long long best = mu.part(1);  // empty chain
  for (size_t p = 0; p < cells.size(); ++p) {
    dp[p] = mu.part(cells[p].row) + 2;
    int ep = U.entry(cells[p].row, cells[p].col);
    for (size_t q = 0; q < p; ++q) {
      if (cells[q].col >= cells[p].col) continue;
      if (cells[q].row < cells[p].row) continue;
      if (U.entry(cells[q].row, cells[q].col) < ep) continue;
      dp[p] = std::max(dp[p], dp[q] + 2);
    }
    best = std::max(best, dp[p]);
  }
  return Frac(best, eps);
}

long long nabla(const Tableau& U, int eps) {
  assert(valid_eps(eps));
  Tableau V = sharp(U);
  assert(is_eps_scaled(V.outer(), eps));
  return zero_raise_count(V, eps);
}

}  // namespace tabcrys
