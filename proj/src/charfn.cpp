#include "tabcrys/charfn.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "json.hpp"
#include "tabcrys/crystal.hpp"
#include "tabcrys/stats.hpp"

namespace tabcrys {

namespace {

int x_degree(const std::vector<int>& exps) {
  int d = 0;
  for (int e : exps) d += e;
  return d;
}

std::vector<int> content_exps(const Tableau& t, int alphabet_size) {
  std::vector<long long> c = t.content();
  std::vector<int> exps(alphabet_size, 0);
  assert(static_cast<int>(c.size()) <= alphabet_size);
  for (size_t r = 0; r < c.size(); ++r) exps[r] = static_cast<int>(c[r]);
  return exps;
}

}  // namespace

CharacterPoly CharacterPoly::zero(int cutoff) {
  CharacterPoly p;
  p.degree_cutoff = cutoff;
  return p;
}

CharacterPoly CharacterPoly::constant(const BigInt& c, int cutoff) {
  CharacterPoly p = zero(cutoff);
  p.add_term(0, {}, c);
  return p;
}

void CharacterPoly::add_term(long long q, std::vector<int> exps, const BigInt& c) {
  assert(q >= 0);
  if (c == 0) return;
  int deg = 0;
  for (int e : exps) {
    assert(e >= 0);
    deg += e;
  }
  if (deg > degree_cutoff) return;
  while (!exps.empty() && exps.back() == 0) exps.pop_back();
  auto key = std::make_pair(q, std::move(exps));
  BigInt& v = terms[key];
  v += c;
  if (v == 0) terms.erase(key);
}

CharacterPoly& CharacterPoly::add_scaled(const CharacterPoly& o, const BigInt& c) {
  degree_cutoff = std::min(degree_cutoff, o.degree_cutoff);
  // re-truncate existing terms to the tightened cutoff
  for (auto it = terms.begin(); it != terms.end();)
    it = x_degree(it->first.second) > degree_cutoff ? terms.erase(it) : std::next(it);
  for (const auto& [key, v] : o.terms) add_term(key.first, key.second, v * c);
  return *this;
}

CharacterPoly CharacterPoly::operator*(const CharacterPoly& o) const {
  CharacterPoly out = zero(std::min(degree_cutoff, o.degree_cutoff));
  for (const auto& [ka, va] : terms) {
    int da = x_degree(ka.second);
    if (da > out.degree_cutoff) continue;
    for (const auto& [kb, vb] : o.terms) {
      if (da + x_degree(kb.second) > out.degree_cutoff) continue;
      std::vector<int> exps(std::max(ka.second.size(), kb.second.size()), 0);
      for (size_t i = 0; i < ka.second.size(); ++i) exps[i] += ka.second[i];
      for (size_t i = 0; i < kb.second.size(); ++i) exps[i] += kb.second[i];
      out.add_term(ka.first + kb.first, std::move(exps), va * vb);
    }
  }
  return out;
}

CharacterPoly CharacterPoly::shifted_q(long long dq) const {
  CharacterPoly out = zero(degree_cutoff);
  for (const auto& [key, v] : terms) out.add_term(key.first + dq, key.second, v);
  return out;
}

BigInt CharacterPoly::coefficient(long long q, std::vector<int> exps) const {
  while (!exps.empty() && exps.back() == 0) exps.pop_back();
  auto it = terms.find({q, exps});
  return it == terms.end() ? BigInt(0) : it->second;
}

BigInt CharacterPoly::coefficient_sum() const {
  BigInt s = 0;
  for (const auto& [key, v] : terms) s += v;
  return s;
}

std::string CharacterPoly::to_string() const {
  if (terms.empty()) return "0\n";
  std::ostringstream os;
  for (const auto& [key, v] : terms) {
    os << v.str();
    if (key.first != 0) os << " * q^" << key.first;
    for (size_t i = 0; i < key.second.size(); ++i)
      if (key.second[i] != 0) os << " * x" << i + 1 << '^' << key.second[i];
    os << '\n';
  }
  return os.str();
}

std::string CharacterPoly::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [key, v] : terms)
    j.push_back({{"coeff", v.str()}, {"q", key.first}, {"exps", key.second}});
  return j.dump();
}

CharacterPoly super_schur(const Partition& outer, const Partition& inner,
                          const GradedAlphabet& a) {
  assert(!a.infinite);
  CharacterPoly p = CharacterPoly::zero();
  for (const Tableau& t : enumerate_sst(outer, inner, a))
    p.add_term(0, content_exps(t, a.size()), 1);
  return p;
}

CharacterPoly super_character_Sx(const Partition& lambda, long long n, int eps,
                                 const GradedAlphabet& a, int D) {
  assert(valid_eps(eps) && !a.infinite && D >= 0);
  assert(in_weight_family(lambda, n, eps));
  CharacterPoly p = CharacterPoly::zero(D);
  if (lambda.size() > D) return p;
  std::vector<Tableau> rights = enumerate_sst(lambda, Partition{}, a);
  long long budget = D - lambda.size();
  for (long long ts = 0; ts <= budget; ++ts) {
    for (const Partition& tau : partitions_of(static_cast<int>(ts))) {
      if (!is_eps_scaled(tau, eps)) continue;
      for (const Tableau& S : enumerate_sst(tau, Partition{}, a)) {
        std::vector<int> left = content_exps(S, a.size());
        for (const Tableau& T : rights) {
          InsertionResult ins = insert_tableau(S, T, true, a);
          if (!(delta(ins.recording, eps) <= Frac::whole(n))) continue;
          std::vector<int> exps = left;
          std::vector<int> right = content_exps(T, a.size());
          for (size_t i = 0; i < exps.size(); ++i) exps[i] += right[i];
          p.add_term(n, std::move(exps), 1);
        }
      }
    }
  }
  return p;
}

bool verify_branching_expansion(const Partition& lambda, long long n, int eps,
                                const GradedAlphabet& a, int D) {
  CharacterPoly lhs = super_character_Sx(lambda, n, eps, a, D);
  CharacterPoly rhs = CharacterPoly::zero(D);
  for (int s = 0; s <= D; ++s) {
    for (const Partition& sigma : partitions_of(s)) {
      if (!sigma.contains(lambda)) continue;
      long long c = static_cast<long long>(branch_levi(sigma, lambda, n, eps).size());
      if (c == 0) continue;
      rhs.add_scaled(super_schur(sigma, Partition{}, a).shifted_q(n), c);
    }
  }
  return lhs == rhs;
}

bool verify_product_expansion(const Partition& mu, long long m, const Partition& nu,
                              long long n, int eps, const GradedAlphabet& a, int D) {
  CharacterPoly lhs =
      super_character_Sx(mu, m, eps, a, D) * super_character_Sx(nu, n, eps, a, D);
  CharacterPoly rhs = CharacterPoly::zero(D);
  for (int s = 0; s <= D; ++s) {
    for (const Partition& lambda : partitions_of(s)) {
      if (!in_weight_family(lambda, m + n, eps)) continue;
      if (!lambda.contains(mu)) continue;
      if (lambda.size() < mu.size() + nu.size()) continue;
      long long c = static_cast<long long>(
          enumerate_lr_pairs(lambda, mu, nu, m, n, eps).size());
      if (c == 0) continue;
      rhs.add_scaled(super_character_Sx(lambda, m + n, eps, a, D), c);
    }
  }
  return lhs == rhs;
}

BigInt weyl_dimension(int k, int eps, const std::vector<long long>& a) {
  assert(k >= 1 && valid_eps(eps) && static_cast<int>(a.size()) == k);
  // Doubled Euclidean coordinates keep everything integral (the eps = 1 case
  // has half-integral spin weights and rho).
  std::vector<long long> two_lam(k), two_rho(k);
  for (int j = 1; j <= k; ++j) {
    long long s = 0;
    if (eps == 1) {
      for (int i = j; i <= k - 1; ++i) s += 2 * a[i - 1];
      s += a[k - 1];
      two_rho[j - 1] = 2 * (k - j) + 1;
    } else {
      for (int i = j; i <= k; ++i) s += 2 * a[i - 1];
      two_rho[j - 1] = 2 * (k - j + 1);
    }
    two_lam[j - 1] = s;
  }
  // Pairings with the positive coroots reduce to v_i - v_j, v_i + v_j (i < j)
  // and v_i up to constants that cancel in the ratio.
  auto root_product = [&](const std::vector<long long>& v) {
    BigInt p = 1;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        p *= BigInt(v[i] - v[j]) * BigInt(v[i] + v[j]);
    for (int i = 0; i < k; ++i) p *= v[i];
    return p;
  };
  std::vector<long long> shifted(k);
  for (int i = 0; i < k; ++i) shifted[i] = two_lam[i] + two_rho[i];
  BigInt num = root_product(shifted), den = root_product(two_rho);
  assert(den != 0 && num % den == 0);
  return num / den;
}

CharacterPoly littlewood_product_side(int eps, int vars, int D) {
  assert(valid_eps(eps) && vars >= 1 && D >= 0);
  CharacterPoly p = CharacterPoly::constant(1, D);
  auto geometric = [&](std::vector<int> step_exps) {
    CharacterPoly g = CharacterPoly::zero(D);
    for (int t = 0;; ++t) {
      std::vector<int> exps(step_exps.size(), 0);
      for (size_t i = 0; i < step_exps.size(); ++i) exps[i] = t * step_exps[i];
      if (x_degree(exps) > D && t > 0) break;
      g.add_term(0, std::move(exps), 1);
    }
    return g;
  };
  for (int i = 0; i < vars; ++i) {
    std::vector<int> step(vars, 0);
    step[i] = eps;
    p = p * geometric(step);
  }
  for (int i = 0; i < vars; ++i) {
    for (int j = i + 1; j < vars; ++j) {
      std::vector<int> step(vars, 0);
      step[i] = 1;
      step[j] = 1;
      p = p * geometric(step);
    }
  }
  return p;
}

CharacterPoly littlewood_schur_side(int eps, int vars, int D) {
  assert(valid_eps(eps) && vars >= 1 && D >= 0);
  GradedAlphabet a = GradedAlphabet::split(vars, 0);
  CharacterPoly p = CharacterPoly::zero(D);
  for (int s = 0; s <= D; ++s) {
    for (const Partition& tau : partitions_of(s)) {
      if (!is_eps_scaled(tau, eps)) continue;
      p.add_scaled(super_schur(tau, Partition{}, a), 1);
    }
  }
  return p;
}

}  // namespace tabcrys
