#pragma once
// Matrix realization of the tableau model. A nonnegative integer matrix with
// finite support, rows indexed by positive letters and columns by dual
// letters, maps under a two-sided row insertion to a pair of equal-shape
// tableaux (positive entries, dual entries). Symmetric matrices with
// eps-scaled diagonal carry folded operators combining the operator for
// letter pair (i, i+1) on the positive side with its mirror on the dual side;
// the corner operator adds or removes eps at entry (1, 1).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tabcrys/core.hpp"
#include "tabcrys/crystal.hpp"
#include "tabcrys/tableau.hpp"

namespace tabcrys {

// --- sparse matrices --------------------------------------------------------
// Entry (i, j) counts units pairing positive letter i with dual letter of
// rank j; both indices are >= 1. Dual letters print as negative numbers.
struct SupportMatrix {
  std::map<std::pair<int, int>, long long> entries;  // only nonzero counts

  long long get(int i, int j) const;
  void add(int i, int j, long long delta);  // erases zeros, asserts >= 0
  long long total() const;
  bool is_zero() const;
  int max_row() const;  // 0 when zero
  int max_col() const;
  SupportMatrix transpose() const;
  bool is_symmetric() const;
  // Diagonal entries divisible by eps (vacuous for eps = 1).
  bool has_scaled_diagonal(int eps) const;

  // Unit cells listed in insertion order: dual rank ascending, and within one
  // dual rank the positive letters descending; one copy per counted unit.
  std::vector<std::pair<int, int>> units_by_dual() const;
  // Transpose order: positive letter ascending, dual rank descending within.
  std::vector<std::pair<int, int>> units_by_positive() const;
  Word positive_word() const;  // letters i in units_by_dual order
  Word dual_word() const;      // ranks j in units_by_positive order

  bool operator==(const SupportMatrix&) const = default;
  std::string to_text() const;  // "i -j count" per line, sorted
  std::string to_json() const;
  static std::optional<SupportMatrix> parse(const std::string& text);
};

// --- two-sided insertion ----------------------------------------------------
struct BiTableau {
  Tableau P;  // positive entries
  Tableau Q;  // dual entries stored as ranks; same shape as P

  bool operator==(const BiTableau&) const = default;
};

// P = row insertion of the positive word, Q = row insertion of the dual word
// (even-letter bump rule on both sides). The shapes agree.
BiTableau rsk(const SupportMatrix& A);
// Exact inverse: peels the largest dual rank off Q column by column, reverse
// bumping through P to recover the units in reverse insertion order.
SupportMatrix rsk_inverse(const Tableau& P, const Tableau& Q);

// --- operators on matrices and bitableaux -----------------------------------
// Index i ranges over all integers: i >= 1 acts through the positive word,
// i <= -1 through the dual word (rank -i to rank -i + 1 under lowering),
// i = 0 adds or removes one unit at (1, 1).
std::optional<SupportMatrix> matrix_lower(const SupportMatrix& A, int i);
std::optional<SupportMatrix> matrix_raise(const SupportMatrix& A, int i);
long long matrix_eps(const SupportMatrix& A, int i);

// The same operators transported to pairs (P, Q): i >= 1 acts on P, i <= -1
// on Q, and i = 0 through the paired column-sign rule below. Used to check
// that rsk intertwines the two actions.
std::optional<BiTableau> pair_lower(const BiTableau& b, int i);
std::optional<BiTableau> pair_raise(const BiTableau& b, int i);
// Finite part of the paired sign sequence over columns (leftmost first, one
// virtual empty column): '-' when both column tops equal the least letter of
// their alphabets, '+' when the column is empty or both tops exceed it.
std::string pair_zero_signature(const BiTableau& b);

// Identity cross-check for the dual side: factor a tableau to its highest
// weight through raising operators and replay the mirrored word; the result
// equals the input entrywise.
Tableau dual_star_replay(const Tableau& t);

// --- folded states ----------------------------------------------------------
struct FoldedVertex {
  SupportMatrix A;  // symmetric, eps-scaled diagonal
  Tableau T;        // straight shape, positive entries
  int eps = 1;

  bool valid() const;
  std::string key() const;
  bool operator==(const FoldedVertex&) const = default;
};

// i = 0: remove (raise) or add (lower) eps at entry (1, 1); lowering is
// total. i >= 1: apply the letter-(i, i+1) operator to the concatenation of
// the positive word of A and the reading word of T. A tableau edit already
// covers the mirrored component (T stands for both mirror-image tableaux); a
// matrix move is followed by the mirrored operator on the dual word of the
// updated matrix, which again moves a matrix unit. Null means null overall.
std::optional<FoldedVertex> folded_lower(const FoldedVertex& m, int i);
std::optional<FoldedVertex> folded_raise(const FoldedVertex& m, int i);
long long folded_eps(const FoldedVertex& m, int i);

// Largest scaled mass of a nested chain: weakly decreasing matrix words
// contribute twice each off-diagonal unit above the diagonal plus the
// eps-floored diagonal entry, tableau chains (columns strictly increasing,
// rows and entries weakly decreasing) contribute twice their length, joined
// over a threshold making the concatenated word weakly decreasing.
long long l_statistic(const FoldedVertex& m);

// Insert the positive word of A and pair the result with T; lands in the
// level-zero tableau model with the same eps.
CrystalVertex rsk_vertex(const FoldedVertex& m);

}  // namespace tabcrys
