#include "tabcrys/crystal.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "json.hpp"
#include "tabcrys/lr.hpp"

namespace tabcrys {

namespace {

// Sign of column unit k (a single column for eps = 1, the column pair
// (2k, 2k-1) for eps = 2): '+', '-', or '.'.
char unit_sign(const Tableau& S, int eps, int k) {
  if (eps == 1) {
    if (k > S.outer().first()) return '+';
    int top = S.entry(S.col_top(k), k);
    return top == 1 ? '-' : '+';
  }
  int c1 = 2 * k - 1, c2 = 2 * k;
  if (c1 > S.outer().first()) return '+';
  assert(c2 <= S.outer().first());
  int t1 = S.entry(S.col_top(c1), c1);
  int t2 = S.entry(S.col_top(c2), c2);
  if (t1 == 1 && t2 == 1) return '-';
  if (t1 >= 2 && t2 >= 2) return '+';
  return '.';
}

struct ZeroScan {
  int raise_unit = 0;  // leftmost surviving '-' (0 if none)
  int lower_unit = 0;  // rightmost surviving '+' (never 0: virtual tail)
};

// Reduce the display string (leftmost unit first): a '-' standing left of a
// '+' with only neutral marks between cancels. Survivors read "+...+-...-".
ZeroScan scan_zero_signature(const Tableau& S, int eps) {
  int units = (eps == 1 ? S.outer().first() : S.outer().first() / 2) + 1;
  std::vector<int> minus_stack, plus_kept;
  for (int k = units; k >= 1; --k) {  // display order: large k (left) first
    char c = unit_sign(S, eps, k);
    if (c == '-') {
      minus_stack.push_back(k);
    } else if (c == '+') {
      if (!minus_stack.empty())
        minus_stack.pop_back();
      else
        plus_kept.push_back(k);
    }
  }
  ZeroScan r;
  if (!minus_stack.empty()) r.raise_unit = minus_stack.front();
  assert(!plus_kept.empty());
  r.lower_unit = plus_kept.back();
  return r;
}

}  // namespace

std::string zero_signature(const Tableau& S, int eps) {
  assert(valid_eps(eps));
  int units = (eps == 1 ? S.outer().first() : S.outer().first() / 2) + 1;
  std::string s;
  for (int k = units; k >= 1; --k) s.push_back(unit_sign(S, eps, k));
  return s;
}

std::optional<Tableau> zero_raise(const Tableau& S, int eps) {
  assert(valid_eps(eps) && !S.is_skew());
  if (eps == 2) assert(S.outer().first() % 2 == 0);
  ZeroScan z = scan_zero_signature(S, eps);
  if (z.raise_unit == 0) return std::nullopt;
  Tableau out = S;
  int width = eps, right_col = eps * z.raise_unit;
  int r = out.col_top(right_col);
  assert(out.outer().part(r) == right_col);
  for (int c = right_col; c > right_col - width; --c) assert(out.entry(r, c) == 1);
  out.shrink(r, width);
  return out;
}

Tableau zero_lower(const Tableau& S, int eps) {
  assert(valid_eps(eps) && !S.is_skew());
  if (eps == 2) assert(S.outer().first() % 2 == 0);
  ZeroScan z = scan_zero_signature(S, eps);
  Tableau out = S;
  int width = eps, right_col = eps * z.lower_unit;
  int h = right_col <= out.outer().first() ? out.col_top(right_col) : 0;
  assert(out.outer().part(h + 1) == right_col - width);
  out.grow(h + 1, width, 1);
  return out;
}

long long zero_raise_count(const Tableau& S, int eps) {
  long long n = 0;
  Tableau cur = S;
  for (;;) {
    auto up = zero_raise(cur, eps);
    if (!up) return n;
    cur = *up;
    ++n;
  }
}

WeightVector CrystalVertex::weight() const {
  WeightVector w(level, {});
  w.add(S.weight_contribution());
  w.add(T.weight_contribution());
  return w;
}

std::string CrystalVertex::key() const {
  return S.canonical() + ";" + T.canonical();
}

namespace {

struct PairWordPos {
  bool in_T = false;
  CellRef cell;
};

// Concatenated reading word of S then T with cell provenance.
std::vector<PairWordPos> pair_positions(const CrystalVertex& v) {
  std::vector<PairWordPos> pos;
  for (const CellRef& c : v.S.reading_cells(true)) pos.push_back({false, c});
  for (const CellRef& c : v.T.reading_cells(true)) pos.push_back({true, c});
  return pos;
}

SignatureScan pair_scan(const CrystalVertex& v, const std::vector<PairWordPos>& pos,
                        int i) {
  std::vector<int> marks(pos.size(), 0);
  for (size_t p = 0; p < pos.size(); ++p) {
    const Tableau& t = pos[p].in_T ? v.T : v.S;
    int e = t.entry(pos[p].cell.row, pos[p].cell.col);
    if (e == i)
      marks[p] = +1;
    else if (e == i + 1)
      marks[p] = -1;
  }
  return scan_signature(marks);
}

std::optional<CrystalVertex> levi_apply(const CrystalVertex& v, int i, bool lo) {
  auto pos = pair_positions(v);
  SignatureScan s = pair_scan(v, pos, i);
  int p = lo ? s.lower_pos : s.raise_pos;
  if (p < 0) return std::nullopt;
  CrystalVertex out = v;
  Tableau& t = pos[p].in_T ? out.T : out.S;
  t.set_entry(pos[p].cell.row, pos[p].cell.col, lo ? i + 1 : i);
  assert(t.is_semistandard());
  return out;
}

}  // namespace

std::optional<CrystalVertex> lower(const CrystalVertex& v, int i) {
  assert(i >= 0);
  if (i == 0) {
    CrystalVertex out = v;
    out.S = zero_lower(v.S, v.eps);
    return out;
  }
  return levi_apply(v, i, true);
}

std::optional<CrystalVertex> raise(const CrystalVertex& v, int i) {
  assert(i >= 0);
  if (i == 0) {
    auto up = zero_raise(v.S, v.eps);
    if (!up) return std::nullopt;
    CrystalVertex out = v;
    out.S = *up;
    return out;
  }
  return levi_apply(v, i, false);
}

long long eps_i(const CrystalVertex& v, int i) {
  if (i == 0) return zero_raise_count(v.S, v.eps);
  auto pos = pair_positions(v);
  return pair_scan(v, pos, i).eps;
}

long long phi_i(const CrystalVertex& v, int i) {
  if (i == 0) return v.weight().pair(0, v.eps) + eps_i(v, 0);
  auto pos = pair_positions(v);
  return pair_scan(v, pos, i).phi;
}

Frac member_delta(const CrystalVertex& v) {
  InsertionResult r = insert_tableau(v.S, v.T, true);
  return delta(r.recording, v.eps);
}

int CrystalGraph::find(const std::string& k) const {
  for (size_t idx = 0; idx < vertices.size(); ++idx)
    if (vertices[idx].key() == k) return static_cast<int>(idx);
  return -1;
}

void CrystalGraph::index_edges() const {
  if (!down_.empty() || edges.empty()) return;
  for (const CrystalEdge& e : edges) {
    down_[{e.from, e.i}] = e.to;
    up_[{e.to, e.i}] = e.from;
  }
}

std::optional<int> CrystalGraph::lower_to(int v, int i) const {
  index_edges();
  auto it = down_.find({v, i});
  if (it == down_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> CrystalGraph::raise_to(int v, int i) const {
  index_edges();
  auto it = up_.find({v, i});
  if (it == up_.end()) return std::nullopt;
  return it->second;
}

long long CrystalGraph::graph_eps(int v, int i) const {
  long long n = 0;
  for (auto cur = raise_to(v, i); cur; cur = raise_to(*cur, i)) ++n, v = *cur;
  return n;
}

long long CrystalGraph::graph_phi(int v, int i) const {
  long long n = 0;
  for (auto cur = lower_to(v, i); cur; cur = lower_to(*cur, i)) ++n, v = *cur;
  return n;
}

std::string CrystalGraph::to_dot() const {
  std::ostringstream os;
  os << "digraph crystal {\n  rankdir=TB;\n";
  for (size_t v = 0; v < vertices.size(); ++v) {
    os << "  v" << v << " [label=\"S:" << vertices[v].S.canonical()
       << "\\nT:" << vertices[v].T.canonical() << "\"";
    if (static_cast<int>(v) == highest) os << " shape=doubleoctagon";
    os << "];\n";
  }
  for (const CrystalEdge& e : edges)
    os << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.i << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string CrystalGraph::to_json() const {
  nlohmann::json j;
  j["lambda"] = lambda.parts;
  j["level"] = level;
  j["eps"] = eps;
  j["rank"] = rank;
  j["highest"] = highest;
  j["vertices"] = nlohmann::json::array();
  for (size_t v = 0; v < vertices.size(); ++v) {
    nlohmann::json w;
    w["level"] = vertices[v].weight().level;
    w["coeffs"] = vertices[v].weight().coeffs;
    j["vertices"].push_back({{"id", v},
                             {"S", vertices[v].S.canonical()},
                             {"T", vertices[v].T.canonical()},
                             {"weight", w}});
  }
  j["edges"] = nlohmann::json::array();
  for (const CrystalEdge& e : edges)
    j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"i", e.i}});
  return j.dump(2);
}

CrystalGraph generate_crystal(const Partition& lambda, long long n, int eps,
                              int rank) {
  assert(valid_eps(eps) && rank >= 1);
  assert(lambda.length() <= rank);
  assert(in_weight_family(lambda, n, eps));

  CrystalVertex hw{Tableau{}, Tableau::highest(lambda), eps, n};
  std::vector<CrystalVertex> verts{hw};
  std::map<std::string, int> seen{{hw.key(), 0}};
  struct RawEdge {
    std::string from, to;
    int i;
  };
  std::vector<RawEdge> raw;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    CrystalVertex cur = verts[v];  // copy: verts may reallocate
    for (int i = 0; i < rank; ++i) {
      auto w = lower(cur, i);
      if (!w) continue;
      if (!(member_delta(*w) <= Frac::whole(n))) continue;
      auto [it, inserted] = seen.try_emplace(w->key(), static_cast<int>(verts.size()));
      if (inserted) {
        verts.push_back(*w);
        q.push(it->second);
      }
      raw.push_back({cur.key(), w->key(), i});
    }
  }

  // Canonical vertex order: sort by serialization, highest stays discoverable
  // through its key.
  std::vector<int> order(verts.size());
  for (size_t idx = 0; idx < verts.size(); ++idx) order[idx] = static_cast<int>(idx);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return verts[a].key() < verts[b].key();
  });
  std::map<std::string, int> newid;
  CrystalGraph g;
  g.lambda = lambda;
  g.level = n;
  g.eps = eps;
  g.rank = rank;
  for (size_t p = 0; p < order.size(); ++p) {
    g.vertices.push_back(verts[order[p]]);
    newid[verts[order[p]].key()] = static_cast<int>(p);
  }
  g.highest = newid.at(hw.key());
  for (const RawEdge& e : raw)
    g.edges.push_back({newid.at(e.from), newid.at(e.to), e.i});
  std::sort(g.edges.begin(), g.edges.end(), [](const CrystalEdge& a, const CrystalEdge& b) {
    return std::tie(a.from, a.i, a.to) < std::tie(b.from, b.i, b.to);
  });
  return g;
}

std::map<Partition, long long> tensor_decompose(const Partition& mu, long long m,
                                                const Partition& nu, long long n,
                                                int eps, int rank) {
  assert(in_weight_family(mu, m, eps) && in_weight_family(nu, n, eps));
  CrystalGraph B2 = generate_crystal(nu, n, eps, rank);
  WeightVector top = dominant_weight(mu, m, eps);
  std::map<Partition, long long> mult;
  for (const CrystalVertex& b : B2.vertices) {
    bool ok = true;
    for (int i = 0; i < rank && ok; ++i) ok = eps_i(b, i) <= top.pair(i, eps);
    if (!ok) continue;
    WeightVector w = top;
    w.add(b.S.weight_contribution());
    w.add(b.T.weight_contribution());
    std::vector<int> parts;
    for (long long c : w.coeffs) parts.push_back(static_cast<int>(c));
    Partition lam(std::move(parts));  // asserts weak decrease
    assert(in_weight_family(lam, m + n, eps));
    ++mult[lam];
  }
  return mult;
}

std::vector<LrPair> enumerate_lr_pairs(const Partition& lambda, const Partition& mu,
                                       const Partition& nu, long long m, long long n,
                                       int eps) {
  assert(valid_eps(eps));
  assert(in_weight_family(mu, m, eps) && in_weight_family(nu, n, eps));
  std::vector<LrPair> out;
  long long tau_size = lambda.size() - mu.size() - nu.size();
  if (tau_size < 0) return out;
  long long eta_size = lambda.size() - nu.size();
  long long raise_budget = m - 2LL * mu.first() / eps;
  std::vector<Partition> taus;
  for (const Partition& t : partitions_of(static_cast<int>(tau_size)))
    if (is_eps_scaled(t, eps)) taus.push_back(t);
  for (const Partition& eta : partitions_between(mu, lambda, eta_size)) {
    std::vector<Tableau> vs = enumerate_lr(lambda, eta, nu);
    if (vs.empty()) continue;
    for (const Partition& tau : taus) {
      for (const Tableau& u : enumerate_lr(eta, mu, tau)) {
        if (nabla(u, eps) > raise_budget) continue;
        Tableau u_sharp = sharp(u);
        for (const Tableau& v : vs) {
          Tableau v_sharp = sharp(v);
          InsertionResult r = insert_tableau(u_sharp, v_sharp, true);
          if (!(delta(r.recording, eps) <= Frac::whole(n))) continue;
          out.push_back({u, v, eta, tau});
        }
      }
    }
  }
  return out;
}

std::vector<Tableau> branch_levi(const Partition& sigma, const Partition& lambda,
                                 long long n, int eps) {
  assert(valid_eps(eps));
  std::vector<Tableau> out;
  long long tau_size = sigma.size() - lambda.size();
  if (tau_size < 0) return out;
  for (const Partition& tau : partitions_of(static_cast<int>(tau_size))) {
    if (!is_eps_scaled(tau, eps)) continue;
    for (const Tableau& u : enumerate_lr(sigma, tau, lambda))
      if (delta(u, eps) <= Frac::whole(n)) out.push_back(u);
  }
  return out;
}

}  // namespace tabcrys
