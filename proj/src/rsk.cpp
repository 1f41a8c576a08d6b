#include "tabcrys/rsk.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace tabcrys {

// --- SupportMatrix ----------------------------------------------------------

long long SupportMatrix::get(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

void SupportMatrix::add(int i, int j, long long delta) {
  assert(i >= 1 && j >= 1);
  if (delta == 0) return;
  long long& c = entries[{i, j}];
  c += delta;
  assert(c >= 0);
  if (c == 0) entries.erase({i, j});
}

long long SupportMatrix::total() const {
  long long t = 0;
  for (const auto& [cell, c] : entries) t += c;
  return t;
}

bool SupportMatrix::is_zero() const { return entries.empty(); }

int SupportMatrix::max_row() const {
  int m = 0;
  for (const auto& [cell, c] : entries) m = std::max(m, cell.first);
  return m;
}

int SupportMatrix::max_col() const {
  int m = 0;
  for (const auto& [cell, c] : entries) m = std::max(m, cell.second);
  return m;
}

SupportMatrix SupportMatrix::transpose() const {
  SupportMatrix t;
  for (const auto& [cell, c] : entries) t.entries[{cell.second, cell.first}] = c;
  return t;
}

bool SupportMatrix::is_symmetric() const {
  for (const auto& [cell, c] : entries)
    if (get(cell.second, cell.first) != c) return false;
  return true;
}

bool SupportMatrix::has_scaled_diagonal(int eps) const {
  assert(valid_eps(eps));
  for (const auto& [cell, c] : entries)
    if (cell.first == cell.second && c % eps != 0) return false;
  return true;
}

std::vector<std::pair<int, int>> SupportMatrix::units_by_dual() const {
  std::vector<std::pair<int, int>> cells;
  for (const auto& [cell, c] : entries) cells.push_back(cell);
  std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : a.first > b.first;
  });
  std::vector<std::pair<int, int>> units;
  for (const auto& cell : cells)
    for (long long c = 0; c < entries.at(cell); ++c) units.push_back(cell);
  return units;
}

std::vector<std::pair<int, int>> SupportMatrix::units_by_positive() const {
  std::vector<std::pair<int, int>> cells;
  for (const auto& [cell, c] : entries) cells.push_back(cell);
  std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  });
  std::vector<std::pair<int, int>> units;
  for (const auto& cell : cells)
    for (long long c = 0; c < entries.at(cell); ++c) units.push_back(cell);
  return units;
}

Word SupportMatrix::positive_word() const {
  Word w;
  for (const auto& [i, j] : units_by_dual()) w.push_back(i);
  return w;
}

Word SupportMatrix::dual_word() const {
  Word w;
  for (const auto& [i, j] : units_by_positive()) w.push_back(j);
  return w;
}

std::string SupportMatrix::to_text() const {
  std::ostringstream os;
  for (const auto& [cell, c] : entries)
    os << cell.first << ' ' << -cell.second << ' ' << c << '\n';
  return os.str();
}

std::string SupportMatrix::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [cell, c] : entries)
    j.push_back({{"row", cell.first}, {"col", -cell.second}, {"count", c}});
  return j.dump();
}

std::optional<SupportMatrix> SupportMatrix::parse(const std::string& text) {
  SupportMatrix A;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    long long i = 0, j = 0, c = 0;
    if (!(ls >> i >> j >> c)) return std::nullopt;
    std::string rest;
    if (ls >> rest) return std::nullopt;
    if (j < 0) j = -j;  // dual letters may be written negatively
    if (i < 1 || j < 1 || c < 1) return std::nullopt;
    if (A.get(static_cast<int>(i), static_cast<int>(j)) != 0) return std::nullopt;
    A.add(static_cast<int>(i), static_cast<int>(j), c);
  }
  return A;
}

// --- insertion both ways ----------------------------------------------------

BiTableau rsk(const SupportMatrix& A) {
  BiTableau b;
  for (int x : A.positive_word()) b.P.row_insert(x);
  for (int x : A.dual_word()) b.Q.row_insert(x);
  assert(b.P.outer() == b.Q.outer());
  return b;
}

namespace {

// Reduce a straight-shape tableau to the highest tableau of its shape,
// recording the raising word (first applicable index at each step).
std::vector<int> raising_word(Tableau& t) {
  std::vector<int> ops;
  const Tableau top = Tableau::highest(t.outer());
  while (!(t == top)) {
    int maxe = 0;
    for (int r = 1; r <= t.rows(); ++r)
      for (int e : t.row_entries(r)) maxe = std::max(maxe, e);
    bool moved = false;
    for (int i = 1; i < maxe && !moved; ++i) {
      if (auto up = tableau_crystal_op(t, i, false)) {
        t = *up;
        ops.push_back(i);
        moved = true;
      }
    }
    assert(moved);  // non-highest tableaux admit a raise
  }
  return ops;
}

}  // namespace

SupportMatrix rsk_inverse(const Tableau& P, const Tableau& Q) {
  assert(!P.is_skew() && !Q.is_skew());
  assert(P.outer() == Q.outer());
  // Raise each side to the highest pair; the unique matrix mapping there is
  // the diagonal of the shape. Replaying the recorded words downward on the
  // matrix inverts the correspondence because it intertwines both actions.
  Tableau p = P, q = Q;
  std::vector<int> pos_ops = raising_word(p);
  std::vector<int> dual_ops = raising_word(q);
  SupportMatrix A;
  for (int k = 1; k <= P.outer().length(); ++k) A.add(k, k, P.outer().part(k));
  for (auto it = pos_ops.rbegin(); it != pos_ops.rend(); ++it) {
    auto down = matrix_lower(A, *it);
    assert(down);
    A = *down;
  }
  for (auto it = dual_ops.rbegin(); it != dual_ops.rend(); ++it) {
    auto down = matrix_lower(A, -*it);
    assert(down);
    A = *down;
  }
  return A;
}

// --- matrix operators -------------------------------------------------------

namespace {

std::optional<SupportMatrix> matrix_op(const SupportMatrix& A, int i, bool lower) {
  if (i == 0) {
    SupportMatrix out = A;
    if (lower) {
      out.add(1, 1, +1);
      return out;
    }
    if (A.get(1, 1) == 0) return std::nullopt;
    out.add(1, 1, -1);
    return out;
  }
  const bool dual = i < 0;
  const int m = dual ? -i : i;
  std::vector<std::pair<int, int>> units =
      dual ? A.units_by_positive() : A.units_by_dual();
  std::vector<int> marks(units.size(), 0);
  for (size_t p = 0; p < units.size(); ++p) {
    int letter = dual ? units[p].second : units[p].first;
    if (letter == m)
      marks[p] = +1;
    else if (letter == m + 1)
      marks[p] = -1;
  }
  SignatureScan s = scan_signature(marks);
  int pos = lower ? s.lower_pos : s.raise_pos;
  if (pos < 0) return std::nullopt;
  auto [r, c] = units[pos];
  SupportMatrix out = A;
  out.add(r, c, -1);
  if (dual)
    out.add(r, lower ? c + 1 : c - 1, +1);
  else
    out.add(lower ? r + 1 : r - 1, c, +1);
  return out;
}

}  // namespace

std::optional<SupportMatrix> matrix_lower(const SupportMatrix& A, int i) {
  return matrix_op(A, i, true);
}

std::optional<SupportMatrix> matrix_raise(const SupportMatrix& A, int i) {
  return matrix_op(A, i, false);
}

long long matrix_eps(const SupportMatrix& A, int i) {
  if (i == 0) return A.get(1, 1);
  const bool dual = i < 0;
  const int m = dual ? -i : i;
  std::vector<std::pair<int, int>> units =
      dual ? A.units_by_positive() : A.units_by_dual();
  std::vector<int> marks(units.size(), 0);
  for (size_t p = 0; p < units.size(); ++p) {
    int letter = dual ? units[p].second : units[p].first;
    if (letter == m)
      marks[p] = +1;
    else if (letter == m + 1)
      marks[p] = -1;
  }
  return scan_signature(marks).eps;
}

// --- bitableau operators ----------------------------------------------------

namespace {

// Per-column signs of the paired zero rule: '-' when both column tops carry
// the least letter of their alphabets, '+' when the column is empty or both
// tops exceed it, '.' otherwise.
char pair_sign(const BiTableau& b, int k) {
  if (k > b.P.outer().first()) return '+';
  int sp = b.P.entry(b.P.col_top(k), k);
  int sq = b.Q.entry(b.Q.col_top(k), k);
  if (sp == 1 && sq == 1) return '-';
  if (sp >= 2 && sq >= 2) return '+';
  return '.';
}

struct PairZeroScan {
  int raise_col = -1;  // leftmost surviving '-'
  int lower_col = -1;  // rightmost surviving '+'
};

// Scan in display order (large column index first); a '-' left of a '+'
// cancels, matching nearest-first.
PairZeroScan scan_pair_zero(const BiTableau& b) {
  int cols = b.P.outer().first() + 1;  // one virtual empty column
  std::vector<int> minus_stack, plus_kept;
  for (int k = cols; k >= 1; --k) {
    char s = pair_sign(b, k);
    if (s == '-') {
      minus_stack.push_back(k);
    } else if (s == '+') {
      if (!minus_stack.empty())
        minus_stack.pop_back();
      else
        plus_kept.push_back(k);
    }
  }
  PairZeroScan r;
  if (!minus_stack.empty()) r.raise_col = minus_stack.front();
  if (!plus_kept.empty()) r.lower_col = plus_kept.back();
  return r;
}

std::optional<BiTableau> pair_zero_op(const BiTableau& b, bool lower) {
  PairZeroScan scan = scan_pair_zero(b);
  BiTableau out = b;
  if (lower) {
    assert(scan.lower_col >= 1);  // virtual '+' columns never all cancel
    int k = scan.lower_col;
    int h = out.P.col_height(k);
    assert(out.P.outer().part(h + 1) == k - 1);
    out.P.grow(h + 1, 1, 1);
    out.Q.grow(h + 1, 1, 1);
    return out;
  }
  if (scan.raise_col < 0) return std::nullopt;
  int k = scan.raise_col;
  int r = out.P.col_top(k);
  assert(r >= 1 && out.P.outer().part(r) == k);
  assert(out.P.entry(r, k) == 1 && out.Q.entry(r, k) == 1);
  out.P.shrink(r, 1);
  out.Q.shrink(r, 1);
  return out;
}

std::optional<BiTableau> pair_op(const BiTableau& b, int i, bool lower) {
  assert(b.P.outer() == b.Q.outer());
  if (i == 0) return pair_zero_op(b, lower);
  if (i > 0) {
    auto p = tableau_crystal_op(b.P, i, lower);
    if (!p) return std::nullopt;
    return BiTableau{*p, b.Q};
  }
  auto q = tableau_crystal_op(b.Q, -i, lower);
  if (!q) return std::nullopt;
  return BiTableau{b.P, *q};
}

}  // namespace

std::optional<BiTableau> pair_lower(const BiTableau& b, int i) {
  return pair_op(b, i, true);
}

std::optional<BiTableau> pair_raise(const BiTableau& b, int i) {
  return pair_op(b, i, false);
}

std::string pair_zero_signature(const BiTableau& b) {
  assert(b.P.outer() == b.Q.outer());
  std::string s;
  for (int k = b.P.outer().first() + 1; k >= 1; --k) s.push_back(pair_sign(b, k));
  return s;
}

Tableau dual_star_replay(const Tableau& t) {
  assert(!t.is_skew());
  Tableau p = t;
  std::vector<int> ops = raising_word(p);
  Tableau out = Tableau::highest(t.outer());
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    auto down = tableau_crystal_op(out, *it, true);
    assert(down);
    out = *down;
  }
  return out;
}

// --- folded states ----------------------------------------------------------

bool FoldedVertex::valid() const {
  return valid_eps(eps) && A.is_symmetric() && A.has_scaled_diagonal(eps) &&
         !T.is_skew() && T.is_semistandard();
}

std::string FoldedVertex::key() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [cell, c] : A.entries) {
    os << (first ? "" : ";") << cell.first << ',' << cell.second << ',' << c;
    first = false;
  }
  os << '#' << T.canonical() << '#' << eps;
  return os.str();
}

namespace {

enum class StageEdit { none, matrix, tableau };

// One word operator on the concatenation of a matrix word and the reading
// word of T. Positions in the matrix part move a unit between adjacent rows
// (positive side) or adjacent columns (dual side). Reports which part was
// edited so the caller can decide whether the mirrored half still has to run.
StageEdit folded_stage(SupportMatrix& A, Tableau& T, int i, bool lower, bool dual) {
  std::vector<std::pair<int, int>> units =
      dual ? A.units_by_positive() : A.units_by_dual();
  std::vector<CellRef> cells = T.reading_cells(true);
  std::vector<int> marks(units.size() + cells.size(), 0);
  for (size_t p = 0; p < units.size(); ++p) {
    int letter = dual ? units[p].second : units[p].first;
    if (letter == i)
      marks[p] = +1;
    else if (letter == i + 1)
      marks[p] = -1;
  }
  for (size_t p = 0; p < cells.size(); ++p) {
    int e = T.entry(cells[p].row, cells[p].col);
    if (e == i)
      marks[units.size() + p] = +1;
    else if (e == i + 1)
      marks[units.size() + p] = -1;
  }
  SignatureScan s = scan_signature(marks);
  int pos = lower ? s.lower_pos : s.raise_pos;
  if (pos < 0) return StageEdit::none;
  if (pos < static_cast<int>(units.size())) {
    auto [r, c] = units[pos];
    A.add(r, c, -1);
    if (dual)
      A.add(r, lower ? c + 1 : c - 1, +1);
    else
      A.add(lower ? r + 1 : r - 1, c, +1);
    return StageEdit::matrix;
  }
  const CellRef& cell = cells[pos - units.size()];
  T.set_entry(cell.row, cell.col, lower ? i + 1 : i);
  return StageEdit::tableau;
}

// Composite operator on a symmetric state. The state stores one copy T of the
// two mirrored tableau components, so a tableau edit by the positive half
// already accounts for the mirrored component as well and the dual half is the
// identity on this representation. Only a matrix move needs the mirrored
// column move; on a symmetric state the dual half then selects a matrix unit
// again, never a tableau cell, because the row word and the column word of a
// symmetric matrix carry identical marks and both tableau components reduce to
// the same signature.
std::optional<FoldedVertex> folded_op(const FoldedVertex& m, int i, bool lower) {
  assert(m.valid() && i >= 1);
  FoldedVertex out = m;
  StageEdit first = folded_stage(out.A, out.T, i, lower, false);
  if (first == StageEdit::none) return std::nullopt;
  if (first == StageEdit::matrix) {
    StageEdit second = folded_stage(out.A, out.T, i, lower, true);
    assert(second == StageEdit::matrix);
    (void)second;
  }
  assert(out.valid());
  return out;
}

}  // namespace

std::optional<FoldedVertex> folded_lower(const FoldedVertex& m, int i) {
  assert(m.valid() && i >= 0);
  if (i == 0) {
    FoldedVertex out = m;
    out.A.add(1, 1, m.eps);
    return out;
  }
  return folded_op(m, i, true);
}

std::optional<FoldedVertex> folded_raise(const FoldedVertex& m, int i) {
  assert(m.valid() && i >= 0);
  if (i == 0) {
    if (m.A.get(1, 1) < m.eps) return std::nullopt;
    FoldedVertex out = m;
    out.A.add(1, 1, -m.eps);
    return out;
  }
  return folded_op(m, i, false);
}

long long folded_eps(const FoldedVertex& m, int i) {
  assert(i >= 0);
  if (i == 0) return m.A.get(1, 1) / m.eps;
  long long k = 0;
  std::optional<FoldedVertex> cur = m;
  while ((cur = folded_raise(*cur, i))) ++k;
  return k;
}

// --- the nested-chain statistic ---------------------------------------------

namespace {

// Interval spans of the upper-triangular cells with the full symmetric mass:
// off-diagonal cells weigh twice their count, diagonal cells their count
// rounded down to a multiple of eps.
struct Span {
  int lo = 0, hi = 0;
  long long mass = 0;
};

// Maximal mass of a weakly nested chain whose outermost span starts at or
// after the threshold. Words realizing such chains read the left endpoint of
// the outermost span last.
long long best_chain_from(const std::vector<Span>& spans,
                          const std::vector<long long>& value, int threshold) {
  long long best = 0;
  for (size_t s = 0; s < spans.size(); ++s)
    if (spans[s].lo >= threshold) best = std::max(best, value[s]);
  return best;
}

// Longest weakly decreasing subsequence of the reading word among letters
// bounded by the cap.
long long capped_decreasing(const Word& w, int cap) {
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

}  // namespace

long long l_statistic(const FoldedVertex& m) {
  assert(m.valid());
  std::vector<Span> spans;
  for (const auto& [cell, c] : m.A.entries) {
    auto [i, j] = cell;
    if (i > j)
      spans.push_back({j, i, 2 * c});
    else if (i == j)
      spans.push_back({i, i, c - c % m.eps});
  }
  // Chain value with a given outermost span, by increasing width; spans are
  // pairwise distinct intervals, so weak nesting never repeats a cell.
  std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) {
    return a.hi - a.lo != b.hi - b.lo ? a.hi - a.lo < b.hi - b.lo
                                      : std::pair(a.lo, a.hi) < std::pair(b.lo, b.hi);
  });
  std::vector<long long> value(spans.size(), 0);
  for (size_t s = 0; s < spans.size(); ++s) {
    long long inner = 0;
    for (size_t t = 0; t < s; ++t)
      if (spans[t].lo >= spans[s].lo && spans[t].hi <= spans[s].hi)
        inner = std::max(inner, value[t]);
    value[s] = spans[s].mass + inner;
  }
  Word w = m.T.reading_word(true);
  int max_entry = 0;
  for (int e : w) max_entry = std::max(max_entry, e);
  long long best = 0;
  for (int r = 0; r <= max_entry; ++r) {
    long long f = best_chain_from(spans, value, r);
    long long g = capped_decreasing(w, r);
    best = std::max(best, f + 2 * g);
  }
  assert(best % m.eps == 0);
  return best / m.eps;
}

CrystalVertex rsk_vertex(const FoldedVertex& m) {
  assert(m.valid());
  BiTableau b = rsk(m.A);
  assert(is_eps_scaled(b.P.outer(), m.eps));
  return CrystalVertex{b.P, m.T, m.eps, 0};
}

}  // namespace tabcrys
