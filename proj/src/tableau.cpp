#include "tabcrys/tableau.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace tabcrys {

Tableau::Tableau(Partition inner, std::vector<std::vector<int>> rows)
    : inner_(std::move(inner)), rows_(std::move(rows)) {
  // Drop trailing fully-empty rows, then derive the outer shape.
  while (!rows_.empty() && rows_.back().empty() &&
         inner_.part(static_cast<int>(rows_.size())) == 0)
    rows_.pop_back();
  std::vector<int> outer;
  for (size_t i = 0; i < rows_.size(); ++i)
    outer.push_back(inner_.part(static_cast<int>(i) + 1) +
                    static_cast<int>(rows_[i].size()));
  outer_ = Partition(std::move(outer));
  assert(outer_.contains(inner_));
  assert(inner_.length() <= outer_.length());
}

Tableau Tableau::highest(const Partition& shape) {
  // Column j holds 1..height top to bottom, so the cell in row i of column j
  // carries height(j) - i + 1.
  Partition conj = shape.conjugate();
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= shape.length(); ++i) {
    std::vector<int> row;
    for (int j = shape.part(i); j >= 1; --j) row.push_back(conj.part(j) - i + 1);
    rows.push_back(std::move(row));
  }
  return Tableau(Partition{}, std::move(rows));
}

bool Tableau::has_cell(int i, int j) const {
  return i >= 1 && i <= rows() && j > inner_.part(i) && j <= outer_.part(i);
}

int Tableau::entry(int i, int j) const {
  assert(has_cell(i, j));
  return rows_[i - 1][outer_.part(i) - j];
}

void Tableau::set_entry(int i, int j, int v) {
  assert(has_cell(i, j));
  rows_[i - 1][outer_.part(i) - j] = v;
}

int Tableau::col_top(int j) const {
  int h = 0;
  while (h < rows() && outer_.part(h + 1) >= j) ++h;
  return h;
}

int Tableau::col_bottom(int j) const {
  int h = 0;
  while (h < rows() && inner_.part(h + 1) >= j) ++h;
  return h + 1;
}

int Tableau::col_height(int j) const {
  int t = col_top(j);
  return t == 0 ? 0 : t - col_bottom(j) + 1;
}

std::vector<long long> Tableau::content() const {
  std::vector<long long> m;
  for (const auto& row : rows_)
    for (int e : row) {
      if (e > static_cast<int>(m.size())) m.resize(e, 0);
      ++m[e - 1];
    }
  return m;
}

WeightVector Tableau::weight_contribution() const {
  return WeightVector(0, content());
}

bool Tableau::is_semistandard(const GradedAlphabet& a) const {
  for (int i = 1; i <= rows(); ++i) {
    for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j) {
      int e = entry(i, j);
      if (!a.valid_letter(e)) return false;
      if (j + 1 <= outer_.part(i) && j + 1 > inner_.part(i)) {
        int left = entry(i, j + 1);  // larger column index = further left
        if (left > e) return false;
        if (left == e && a.is_odd(e)) return false;  // odd letters strict in rows
      }
      if (has_cell(i + 1, j)) {
        int above = entry(i + 1, j);
        if (above > e) return false;
        if (above == e && !a.is_odd(e)) return false;  // even letters strict in columns
      }
    }
  }
  return true;
}

std::vector<CellRef> Tableau::reading_cells(bool by_column) const {
  std::vector<CellRef> cells;
  if (by_column) {
    for (int j = 1; j <= outer_.first(); ++j)
      for (int i = col_top(j); i >= col_bottom(j); --i) cells.push_back({i, j});
  } else {
    for (int i = rows(); i >= 1; --i)
      for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j)
        cells.push_back({i, j});
  }
  return cells;
}

Word Tableau::reading_word(bool by_column) const {
  Word w;
  for (const CellRef& c : reading_cells(by_column)) w.push_back(entry(c.row, c.col));
  return w;
}

CellRef Tableau::row_insert(int letter, const GradedAlphabet& a) {
  assert(inner_.empty());
  int carry = letter;
  for (int r = 1;; ++r) {
    if (r > rows()) {
      rows_.push_back({carry});
      outer_ = Partition([&] {
        auto p = outer_.parts;
        p.push_back(1);
        return p;
      }());
      return {r, 1};
    }
    auto& row = rows_[r - 1];
    bool odd = a.is_odd(carry);
    // Entries increase left to right, so candidates for displacement form a
    // prefix; take the last index still below (or equal to, for odd letters).
    int t = -1;
    for (int p = 0; p < static_cast<int>(row.size()); ++p) {
      if (row[p] < carry || (odd && row[p] == carry))
        t = p;
      else
        break;
    }
    if (t < 0) {
      row.insert(row.begin(), carry);
      outer_ = Partition([&] {
        auto p = outer_.parts;
        p[r - 1] += 1;
        return p;
      }());
      assert(r == 1 || outer_.part(r - 1) >= outer_.part(r));
      return {r, outer_.part(r)};
    }
    std::swap(carry, row[t]);
  }
}

void Tableau::grow(int row, int width, int letter) {
  assert(row >= 1 && row <= rows() + 1 && width >= 1);
  if (row > rows()) rows_.push_back({});
  rows_[row - 1].insert(rows_[row - 1].begin(), width, letter);
  std::vector<int> outer;
  for (size_t i = 0; i < rows_.size(); ++i)
    outer.push_back(inner_.part(static_cast<int>(i) + 1) +
                    static_cast<int>(rows_[i].size()));
  outer_ = Partition(std::move(outer));
}

void Tableau::shrink(int row, int width) {
  assert(row >= 1 && row <= rows());
  assert(static_cast<int>(rows_[row - 1].size()) >= width);
  rows_[row - 1].erase(rows_[row - 1].begin(), rows_[row - 1].begin() + width);
  while (!rows_.empty() && rows_.back().empty() &&
         inner_.part(static_cast<int>(rows_.size())) == 0)
    rows_.pop_back();
  std::vector<int> outer;
  for (size_t i = 0; i < rows_.size(); ++i)
    outer.push_back(inner_.part(static_cast<int>(i) + 1) +
                    static_cast<int>(rows_[i].size()));
  outer_ = Partition(std::move(outer));
}

std::string Tableau::to_text() const {
  std::ostringstream os;
  for (int i = 1; i <= rows(); ++i) {
    if (i > 1) os << '\n';
    bool first = true;
    for (int e : rows_[i - 1]) {
      os << (first ? "" : ",") << e;
      first = false;
    }
    for (int d = 0; d < inner_.part(i); ++d) {
      os << (first ? "" : ",") << '.';
      first = false;
    }
  }
  return os.str();
}

std::string Tableau::canonical() const {
  std::string t = to_text();
  if (t.empty()) return "-";
  std::replace(t.begin(), t.end(), '\n', '/');
  return t;
}

std::string Tableau::pretty() const {
  if (rows() == 0) return "(empty)";
  int w = 1;
  for (const auto& row : rows_)
    for (int e : row) w = std::max(w, static_cast<int>(std::to_string(e).size()));
  std::ostringstream os;
  for (int i = rows(); i >= 1; --i) {
    for (int j = outer_.first(); j >= 1; --j) {
      std::string cell;
      if (has_cell(i, j))
        cell = std::to_string(entry(i, j));
      else if (j <= inner_.part(i))
        cell = ".";
      std::string pad(w - cell.size() + (j == outer_.first() ? 0 : 1), ' ');
      os << pad << cell;
    }
    if (i > 1) os << '\n';
  }
  return os.str();
}

std::string Tableau::to_json(const GradedAlphabet& a) const {
  (void)a;
  nlohmann::json j;
  j["outer"] = outer_.parts;
  j["inner"] = inner_.parts;
  j["rows"] = rows_;
  return j.dump();
}

std::optional<Tableau> Tableau::from_text(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::vector<int> inner;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.empty() && ss.eof()) break;
    std::vector<int> row;
    int dots = 0;
    std::stringstream ls(line);
    std::string tok;
    bool in_dots = false;
    while (std::getline(ls, tok, ',')) {
      if (tok == ".") {
        in_dots = true;
        ++dots;
      } else {
        if (in_dots) return std::nullopt;  // entries must precede the inner dots
        try {
          size_t used = 0;
          int v = std::stoi(tok, &used);
          if (used != tok.size() || v < 1) return std::nullopt;
          row.push_back(v);
        } catch (...) {
          return std::nullopt;
        }
      }
    }
    rows.push_back(std::move(row));
    inner.push_back(dots);
  }
  while (!rows.empty() && rows.back().empty() && inner.back() == 0) {
    rows.pop_back();
    inner.pop_back();
  }
  // Validate shapes without tripping assertions.
  std::vector<int> outer;
  for (size_t i = 0; i < rows.size(); ++i) outer.push_back(inner[i] + rows[i].size());
  for (size_t i = 1; i < outer.size(); ++i) {
    if (outer[i - 1] < outer[i] || inner[i - 1] < inner[i]) return std::nullopt;
  }
  while (!inner.empty() && inner.back() == 0) inner.pop_back();
  for (size_t i = 1; i < inner.size(); ++i)
    if (inner[i - 1] < inner[i]) return std::nullopt;
  if (!inner.empty() && inner.size() > outer.size()) return std::nullopt;
  return Tableau(Partition(std::move(inner)), std::move(rows));
}

InsertionResult insert_tableau(const Tableau& S, const Tableau& T, bool by_column,
                               const GradedAlphabet& a) {
  assert(!S.is_skew());
  Tableau P = S;
  std::map<std::pair<int, int>, int> labels;
  for (const CellRef& c : T.reading_cells(by_column)) {
    CellRef grew = P.row_insert(T.entry(c.row, c.col), a);
    labels[{grew.row, grew.col}] = c.row;
  }
  std::vector<std::vector<int>> rec_rows;
  for (int i = 1; i <= P.rows(); ++i) {
    std::vector<int> row;
    for (int j = P.outer().part(i); j > S.outer().part(i); --j) {
      auto it = labels.find({i, j});
      assert(it != labels.end());
      row.push_back(it->second);
    }
    rec_rows.push_back(std::move(row));
  }
  assert(labels.size() == static_cast<size_t>(P.cells() - S.cells()));
  return {P, Tableau(S.outer(), std::move(rec_rows))};
}

static void fill_cells(Tableau& t, const std::vector<CellRef>& cells, size_t pos,
                       const GradedAlphabet& a, std::vector<Tableau>& out) {
  if (pos == cells.size()) {
    out.push_back(t);
    return;
  }
  auto [i, j] = cells[pos];
  int lo = 1, hi = a.size();
  if (t.has_cell(i + 1, j)) {
    int above = t.entry(i + 1, j);
    lo = std::max(lo, above + (a.is_odd(above) ? 0 : 1));
  }
  if (t.has_cell(i, j - 1)) {
    int right = t.entry(i, j - 1);
    hi = std::min(hi, right - (a.is_odd(right) ? 1 : 0));
  }
  for (int e = lo; e <= hi; ++e) {
    t.set_entry(i, j, e);
    fill_cells(t, cells, pos + 1, a, out);
  }
}

std::vector<Tableau> enumerate_sst(const Partition& outer, const Partition& inner,
                                   const GradedAlphabet& a) {
  assert(!a.infinite);
  assert(outer.contains(inner));
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= outer.length(); ++i)
    rows.push_back(std::vector<int>(outer.part(i) - inner.part(i), 1));
  Tableau shell(inner, std::move(rows));
  std::vector<Tableau> out;
  fill_cells(shell, shell.reading_cells(true), 0, a, out);
  std::sort(out.begin(), out.end(), [](const Tableau& x, const Tableau& y) {
    return x.reading_word(true) < y.reading_word(true);
  });
  return out;
}

SignatureScan scan_signature(const std::vector<int>& marks) {
  std::vector<int> pluses, minuses;
  for (int p = 0; p < static_cast<int>(marks.size()); ++p) {
    if (marks[p] > 0) {
      pluses.push_back(p);
    } else if (marks[p] < 0) {
      if (!pluses.empty())
        pluses.pop_back();
      else
        minuses.push_back(p);
    }
  }
  SignatureScan r;
  r.eps = static_cast<int>(minuses.size());
  r.phi = static_cast<int>(pluses.size());
  if (!minuses.empty()) r.raise_pos = minuses.back();
  if (!pluses.empty()) r.lower_pos = pluses.front();
  return r;
}

std::string cancel_signs(std::string s) {
  bool changed = true;
  while (changed) {
    changed = false;
    int open = -1;
    for (int p = 0; p < static_cast<int>(s.size()); ++p) {
      if (s[p] == '+') {
        open = p;
      } else if (s[p] == '-') {
        if (open >= 0) {
          s[open] = '.';
          s[p] = '.';
          changed = true;
          break;
        }
      }
    }
  }
  return s;
}

std::optional<Word> word_crystal_op(const Word& w, int i, bool lower) {
  std::vector<int> marks(w.size(), 0);
  for (size_t p = 0; p < w.size(); ++p) {
    if (w[p] == i)
      marks[p] = +1;
    else if (w[p] == i + 1)
      marks[p] = -1;
  }
  SignatureScan s = scan_signature(marks);
  int pos = lower ? s.lower_pos : s.raise_pos;
  if (pos < 0) return std::nullopt;
  Word out = w;
  out[pos] = lower ? i + 1 : i;
  return out;
}

std::optional<Tableau> tableau_crystal_op(const Tableau& t, int i, bool lower) {
  std::vector<CellRef> cells = t.reading_cells(true);
  std::vector<int> marks(cells.size(), 0);
  for (size_t p = 0; p < cells.size(); ++p) {
    int e = t.entry(cells[p].row, cells[p].col);
    if (e == i)
      marks[p] = +1;
    else if (e == i + 1)
      marks[p] = -1;
  }
  SignatureScan s = scan_signature(marks);
  int pos = lower ? s.lower_pos : s.raise_pos;
  if (pos < 0) return std::nullopt;
  Tableau out = t;
  out.set_entry(cells[pos].row, cells[pos].col, lower ? i + 1 : i);
  return out;
}

}  // namespace tabcrys
