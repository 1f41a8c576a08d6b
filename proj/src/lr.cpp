#include "tabcrys/lr.hpp"

#include <algorithm>
#include <map>

namespace tabcrys {

bool is_lattice(const Word& w) {
  std::vector<long long> count;
  for (int e : w) {
    if (e < 1) return false;
    if (e > static_cast<int>(count.size())) count.resize(e, 0);
    ++count[e - 1];
    if (e >= 2 && count[e - 1] > count[e - 2]) return false;
  }
  return true;
}

bool is_lr(const Tableau& U) {
  return U.is_semistandard(GradedAlphabet::positive()) &&
         is_lattice(U.reading_word(true));
}

Partition content_partition(const Tableau& U) {
  auto m = U.content();
  std::vector<int> parts(m.begin(), m.end());
  for (size_t i = 1; i < parts.size(); ++i) assert(parts[i - 1] >= parts[i]);
  return Partition(std::move(parts));
}

namespace {

struct LrFill {
  Tableau t;
  std::vector<CellRef> cells;
  std::vector<long long> count;  // running letter multiplicities
  const Partition* nu;
  std::vector<Tableau>* out;

  void rec(size_t pos) {
    if (pos == cells.size()) {
      out->push_back(t);
      return;
    }
    auto [i, j] = cells[pos];
    int lo = 1, hi = nu->length();
    if (t.has_cell(i + 1, j)) lo = std::max(lo, t.entry(i + 1, j) + 1);
    if (t.has_cell(i, j - 1)) hi = std::min(hi, t.entry(i, j - 1));
    for (int e = lo; e <= hi; ++e) {
      if (count[e - 1] + 1 > nu->part(e)) continue;               // content bound
      if (e >= 2 && count[e - 1] + 1 > count[e - 2]) continue;    // lattice prefix
      ++count[e - 1];
      t.set_entry(i, j, e);
      rec(pos + 1);
      --count[e - 1];
    }
  }
};

}  // namespace

std::vector<Tableau> enumerate_lr(const Partition& lambda, const Partition& mu,
                                  const Partition& nu) {
  std::vector<Tableau> out;
  if (!lambda.contains(mu)) return out;
  if (lambda.size() != mu.size() + nu.size()) return out;
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= lambda.length(); ++i)
    rows.push_back(std::vector<int>(lambda.part(i) - mu.part(i), 1));
  LrFill f{Tableau(mu, std::move(rows)), {}, std::vector<long long>(nu.length(), 0),
           &nu, &out};
  f.cells = f.t.reading_cells(true);
  f.rec(0);
  std::sort(out.begin(), out.end(), [](const Tableau& x, const Tableau& y) {
    return x.reading_word(true) < y.reading_word(true);
  });
  return out;
}

long long lr_coefficient(const Partition& lambda, const Partition& mu,
                         const Partition& nu) {
  return static_cast<long long>(enumerate_lr(lambda, mu, nu).size());
}

Tableau sharp(const Tableau& U) {
  assert(is_lr(U));
  Partition nu = content_partition(U);
  // Row i of the image collects one k for every i appearing in row k of U.
  std::vector<std::vector<int>> rows(nu.length());
  for (int k = 1; k <= U.rows(); ++k)
    for (int j = U.inner().part(k) + 1; j <= U.outer().part(k); ++j)
      rows[U.entry(k, j) - 1].push_back(k);
  for (auto& row : rows) std::sort(row.begin(), row.end());
  Tableau V(Partition{}, std::move(rows));
  assert(sharp_inverse(V, U.inner()) == U);
  return V;
}

Tableau sharp_inverse(const Tableau& V, const Partition& mu) {
  assert(!V.is_skew());
  InsertionResult r = insert_tableau(Tableau::highest(mu), V, true);
  assert(r.result == Tableau::highest(r.result.outer()));
  assert(is_lr(r.recording));
  return r.recording;
}

}  // namespace tabcrys
