#pragma once
// Tableaux in the bottom-up convention: rows are indexed from the bottom and
// right-justified, columns are indexed from the right. Row i occupies columns
// inner_i < j <= outer_i. Entries weakly increase left to right along rows and
// top to bottom down columns; even letters are strict in columns, odd letters
// strict in rows. All insertion code assumes straight shapes (inner empty).

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tabcrys/core.hpp"

namespace tabcrys {

struct CellRef {
  int row = 0;  // 1-based from the bottom
  int col = 0;  // 1-based from the right
  bool operator==(const CellRef&) const = default;
};

class Tableau {
 public:
  Tableau() = default;
  // rows[i] lists row i+1's entries left to right; lengths must decrease
  // weakly upward and strictly dominate the inner shape rowwise.
  Tableau(Partition inner, std::vector<std::vector<int>> rows);

  static Tableau highest(const Partition& shape);  // k-th from the top of each column is k

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  bool is_skew() const { return !inner_.empty(); }
  int rows() const { return outer_.length(); }
  long long cells() const { return outer_.size() - inner_.size(); }
  bool empty() const { return cells() == 0; }

  bool has_cell(int i, int j) const;
  int entry(int i, int j) const;
  void set_entry(int i, int j, int v);
  const std::vector<int>& row_entries(int i) const { return rows_[i - 1]; }

  int col_top(int j) const;     // highest row meeting column j (0 if none)
  int col_bottom(int j) const;  // lowest row meeting column j
  int col_height(int j) const;

  // Letter multiplicities m_1, m_2, ... up to the largest entry.
  std::vector<long long> content() const;
  WeightVector weight_contribution() const;  // content as eps_hat coefficients

  bool is_semistandard(const GradedAlphabet& a = GradedAlphabet::positive()) const;

  // Reading orders. Column mode scans columns right to left, top to bottom in
  // each column; row mode scans rows top to bottom, right to left in each row.
  std::vector<CellRef> reading_cells(bool by_column = true) const;
  Word reading_word(bool by_column = true) const;

  // Schensted bumping (straight shapes): an even letter displaces the
  // rightmost entry smaller than it, an odd letter the rightmost entry not
  // larger than it; with nothing to displace the letter extends the row at its
  // left end. Returns the cell where the shape grew.
  CellRef row_insert(int letter, const GradedAlphabet& a = GradedAlphabet::positive());

  // Structural edits used by the crystal operators.
  void grow(int row, int width, int letter);   // prepend `width` copies at the left end
  void shrink(int row, int width);             // drop `width` cells from the left end

  bool operator==(const Tableau&) const = default;

  std::string to_text() const;                 // one line per row, bottom row first
  std::string canonical() const;               // single-line form used as a map key
  std::string pretty() const;                  // aligned 2-D rendering
  std::string to_json(const GradedAlphabet& a = GradedAlphabet::positive()) const;
  static std::optional<Tableau> from_text(const std::string& text);

 private:
  Partition outer_, inner_;
  std::vector<std::vector<int>> rows_;  // rows_[i-1] left to right
};

// Insertion of T into S along T's reading word, with the recording tableau on
// shape sh(result)/sh(S) labelled by the source row of each inserted letter.
struct InsertionResult {
  Tableau result;
  Tableau recording;
};
InsertionResult insert_tableau(const Tableau& S, const Tableau& T,
                               bool by_column = true,
                               const GradedAlphabet& a = GradedAlphabet::positive());

// All semistandard fillings of the shape over a finite alphabet, sorted by
// column reading word.
std::vector<Tableau> enumerate_sst(const Partition& outer, const Partition& inner,
                                   const GradedAlphabet& a);

// ---------------------------------------------------------------------------
// Word-level crystal operators. Marks: +1 for the letter the lowering operator
// acts on (the pair's smaller letter), -1 for the raised letter. A scan
// cancels "+-" factors; survivors form "-...-+...+".
struct SignatureScan {
  int eps = 0;        // surviving '-' count
  int phi = 0;        // surviving '+' count
  int raise_pos = -1; // rightmost surviving '-', -1 if none
  int lower_pos = -1; // leftmost surviving '+', -1 if none
};
SignatureScan scan_signature(const std::vector<int>& marks);

// Literal rewriting of a +/-/. string by repeatedly cancelling adjacent "+-"
// pairs (dots transparent); used as an oracle for scan_signature.
std::string cancel_signs(std::string s);

// Apply the crystal operator for the adjacent letter pair (i, i+1) to a word;
// lower = true applies the lowering operator. Returns nullopt when null.
std::optional<Word> word_crystal_op(const Word& w, int i, bool lower);

// The same operator applied to a tableau through its column reading word; the
// edit happens in place at the acted cell.
std::optional<Tableau> tableau_crystal_op(const Tableau& t, int i, bool lower);

}  // namespace tabcrys
