#pragma once
// Shared test utilities: tableau literals, a small deterministic RNG, and
// brute-force oracles that restate the definitions directly (weakly
// decreasing subwords, symmetric submatrices) so they share no code path with
// the library implementations they check.

#include <algorithm>
#include <climits>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "tabcrys/core.hpp"
#include "tabcrys/rsk.hpp"
#include "tabcrys/tableau.hpp"

namespace testutil {

// Accepts '/' as a row separator so tests can use the compact canonical form.
inline tabcrys::Tableau tab(std::string text) {
  std::replace(text.begin(), text.end(), '/', '\n');
  auto t = tabcrys::Tableau::from_text(text);
  REQUIRE(t.has_value());
  return *t;
}

inline tabcrys::Partition part(std::vector<int> p) {
  return tabcrys::Partition(std::move(p));
}

struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}
  int below(int n) { return static_cast<int>(g() % static_cast<std::uint64_t>(n)); }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }
};

// Maximal value of inner(first row) + 2 * length over all weakly decreasing
// subwords of one reading word of U (empty subword included), straight from
// the definition via subset enumeration. Only for small tableaux.
inline long long brute_delta_mass(const tabcrys::Tableau& U, bool by_column) {
  std::vector<tabcrys::CellRef> cells = U.reading_cells(by_column);
  const int n = static_cast<int>(cells.size());
  REQUIRE(n <= 14);
  long long best = U.inner().part(1);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int prev = INT_MAX, first_row = 0, len = 0;
    bool ok = true;
    for (int p = 0; p < n && ok; ++p) {
      if (!(mask & (1u << p))) continue;
      int e = U.entry(cells[p].row, cells[p].col);
      if (e > prev) {
        ok = false;
        break;
      }
      prev = e;
      if (len == 0) first_row = cells[p].row;
      ++len;
    }
    if (ok) best = std::max(best, U.inner().part(first_row) + 2LL * len);
  }
  return best;
}

// Longest weakly decreasing subsequence of w among letters bounded by cap.
inline long long weakly_decreasing_within(const tabcrys::Word& w, int cap) {
  long long best = 0;
  std::vector<long long> dp(w.size(), 0);
  for (size_t p = 0; p < w.size(); ++p) {
    if (w[p] > cap) continue;
    dp[p] = 1;
    for (size_t q = 0; q < p; ++q)
      if (w[q] <= cap && w[q] >= w[p]) dp[p] = std::max(dp[p], dp[q] + 1);
    best = std::max(best, dp[p]);
  }
  return best;
}

// Maximal mass of a weakly decreasing sequence for a folded state: pick a
// symmetric submatrix A' <= A with eps-stepped diagonal whose unit word (row
// letters in dual-rank order) is weakly decreasing, then extend by a weakly
// decreasing subword of the reading word of T bounded by the word's last
// letter; the mass counts every unit once and every tableau cell twice.
inline long long brute_l_mass(const tabcrys::FoldedVertex& m) {
  struct UpperCell {
    int i, j;
    long long limit;
  };
  std::vector<UpperCell> upper;
  for (const auto& [cell, c] : m.A.entries)
    if (cell.first <= cell.second) upper.push_back({cell.first, cell.second, c});
  tabcrys::Word wt = m.T.reading_word(true);
  long long best = 0;
  std::vector<long long> picked(upper.size(), 0);
  auto evaluate = [&]() {
    std::vector<std::pair<int, int>> units;  // (row, col), one per unit
    for (size_t u = 0; u < upper.size(); ++u) {
      for (long long c = 0; c < picked[u]; ++c) {
        units.push_back({upper[u].i, upper[u].j});
        if (upper[u].i != upper[u].j) units.push_back({upper[u].j, upper[u].i});
      }
    }
    std::sort(units.begin(), units.end(), [](const auto& a, const auto& b) {
      return a.second != b.second ? a.second < b.second : a.first > b.first;
    });
    for (size_t p = 1; p < units.size(); ++p)
      if (units[p - 1].first < units[p].first) return;  // word not weakly decreasing
    int cap = units.empty() ? INT_MAX : units.back().first;
    long long mass = static_cast<long long>(units.size());
    best = std::max(best, mass + 2 * weakly_decreasing_within(wt, cap));
  };
  auto rec = [&](auto&& self, size_t u) -> void {
    if (u == upper.size()) {
      evaluate();
      return;
    }
    long long step = upper[u].i == upper[u].j ? m.eps : 1;
    for (long long c = 0; c <= upper[u].limit; c += step) {
      picked[u] = c;
      self(self, u + 1);
    }
    picked[u] = 0;
  };
  rec(rec, 0);
  return best;
}

// The letter-pair operator recomputed through the literal rewriting oracle:
// mark the word, cancel adjacent "+-" pairs until stable, then act at the
// first surviving '+' (lowering) or the last surviving '-' (raising).
inline std::optional<tabcrys::Word> word_op_oracle(const tabcrys::Word& w, int i,
                                                   bool lower) {
  std::string s(w.size(), '.');
  for (size_t p = 0; p < w.size(); ++p) {
    if (w[p] == i)
      s[p] = '+';
    else if (w[p] == i + 1)
      s[p] = '-';
  }
  std::string c = tabcrys::cancel_signs(std::move(s));
  int pos = -1;
  if (lower) {
    auto f = c.find('+');
    if (f != std::string::npos) pos = static_cast<int>(f);
  } else {
    auto f = c.rfind('-');
    if (f != std::string::npos) pos = static_cast<int>(f);
  }
  if (pos < 0) return std::nullopt;
  tabcrys::Word out = w;
  out[pos] = lower ? i + 1 : i;
  return out;
}

}  // namespace testutil
