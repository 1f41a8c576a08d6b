#include "tabcrys/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tabcrys {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (size_t i = 0; i < parts.size(); ++i) {
    assert(parts[i] > 0);
    assert(i == 0 || parts[i - 1] >= parts[i]);
  }
}

long long Partition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0LL);
}

int Partition::part(int i) const {
  assert(i >= 1);
  return i <= length() ? parts[i - 1] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int j = 1; j <= first(); ++j) {
    int h = 0;
    while (h < length() && parts[h] >= j) ++h;
    c.push_back(h);
  }
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.part(i) > part(i)) return false;
  return true;
}

Partition Partition::scaled(int factor) const {
  std::vector<int> p(parts);
  for (int& x : p) x *= factor;
  return Partition(std::move(p));
}

std::string Partition::to_string() const {
  if (empty()) return "(0)";
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < length(); ++i) os << (i ? "," : "") << parts[i];
  os << ')';
  return os.str();
}

std::optional<Partition> Partition::parse(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.front() == '(') s = s.substr(1);
  if (!s.empty() && s.back() == ')') s.pop_back();
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 0) return std::nullopt;
      parts.push_back(v);
    } catch (...) {
      return std::nullopt;
    }
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (size_t i = 1; i < parts.size(); ++i)
    if (parts[i - 1] < parts[i]) return std::nullopt;
  if (std::any_of(parts.begin(), parts.end(), [](int v) { return v <= 0; }))
    return std::nullopt;
  return Partition(std::move(parts));
}

bool is_eps_scaled(const Partition& p, int eps) {
  assert(valid_eps(eps));
  if (eps == 1) return true;
  return std::all_of(p.parts.begin(), p.parts.end(),
                     [eps](int x) { return x % eps == 0; });
}

bool in_weight_family(const Partition& lambda, long long n, int eps) {
  assert(valid_eps(eps));
  return n >= 0 && 2LL * lambda.first() <= eps * n;
}

static void gen_partitions(int remaining, int max_part, int max_len,
                           std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_len == 0) return;
  int hi = std::min(remaining, max_part);
  for (int p = hi; p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, max_len - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int n, int max_part, int max_len) {
  if (max_part < 0) max_part = n;
  if (max_len < 0) max_len = n;
  std::vector<Partition> out;
  std::vector<int> cur;
  if (n >= 0) gen_partitions(n, std::max(max_part, 0), max_len, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n, int max_part, int max_len) {
  std::vector<Partition> out;
  for (int m = 0; m <= n; ++m) {
    auto v = partitions_of(m, max_part, max_len);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

static void gen_between(const Partition& mu, const Partition& lambda, int row,
                        long long left, std::vector<int>& cur,
                        std::vector<Partition>& out) {
  if (row > lambda.length()) {
    if (left == 0) out.emplace_back(cur);
    return;
  }
  int lo = mu.part(row);
  int hi = lambda.part(row);
  if (row > 1) hi = std::min(hi, cur[row - 2]);
  for (int v = hi; v >= lo; --v) {
    if (v > left) continue;
    cur.push_back(v);
    gen_between(mu, lambda, row + 1, left - v, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_between(const Partition& mu,
                                          const Partition& lambda,
                                          long long size) {
  std::vector<Partition> out;
  if (!lambda.contains(mu) || size < mu.size() || size > lambda.size())
    return out;
  std::vector<int> cur;
  gen_between(mu, lambda, 1, size, cur, out);
  return out;
}

std::string GradedAlphabet::letter_name(int letter) const {
  assert(valid_letter(letter));
  if (dual_display) return "-" + std::to_string(letter);
  return std::to_string(letter);
}

GradedAlphabet GradedAlphabet::positive() { return GradedAlphabet{}; }

GradedAlphabet GradedAlphabet::dual_negative() {
  GradedAlphabet a;
  a.dual_display = true;
  return a;
}

GradedAlphabet GradedAlphabet::graded(std::vector<bool> odd_flags) {
  GradedAlphabet a;
  a.infinite = false;
  a.odd = std::move(odd_flags);
  return a;
}

GradedAlphabet GradedAlphabet::split(int n_even, int n_odd) {
  std::vector<bool> f(n_even, false);
  f.insert(f.end(), n_odd, true);
  return graded(std::move(f));
}

Frac::Frac(long long n, int d) : num(n), den(d) {
  assert(den == 1 || den == 2);
  if (den == 2 && num % 2 == 0) {
    num /= 2;
    den = 1;
  }
}

std::string Frac::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/2";
}

WeightVector::WeightVector(long long lvl, std::vector<long long> c)
    : level(lvl), coeffs(std::move(c)) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

long long WeightVector::coeff(int i) const {
  assert(i >= 1);
  return i <= static_cast<int>(coeffs.size()) ? coeffs[i - 1] : 0;
}

WeightVector& WeightVector::add(const WeightVector& o, long long mult) {
  level += mult * o.level;
  if (o.coeffs.size() > coeffs.size()) coeffs.resize(o.coeffs.size(), 0);
  for (size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] += mult * o.coeffs[i];
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return *this;
}

long long WeightVector::pair(int i, int eps) const {
  assert(valid_eps(eps) && i >= 0);
  if (i == 0) {
    long long twice = 2 * coeff(1);
    assert(twice % eps == 0);
    return level - twice / eps;
  }
  return coeff(i) - coeff(i + 1);
}

bool WeightVector::is_dominant(int eps) const {
  if (pair(0, eps) < 0) return false;
  for (int i = 1; i <= static_cast<int>(coeffs.size()); ++i)
    if (pair(i, eps) < 0) return false;
  return true;
}

std::string WeightVector::to_string() const {
  std::ostringstream os;
  os << level << "L0+(";
  for (size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i];
  os << ')';
  return os.str();
}

WeightVector dominant_weight(const Partition& lambda, long long n, int eps) {
  assert(in_weight_family(lambda, n, eps));
  std::vector<long long> c(lambda.parts.begin(), lambda.parts.end());
  return WeightVector(n, std::move(c));
}

WeightVector root_step(int i, int eps) {
  assert(valid_eps(eps) && i >= 0);
  // Lowering at the zero node raises the eps_hat_1 coefficient by eps;
  // lowering at node i >= 1 moves one unit from coefficient i to i + 1.
  if (i == 0) return WeightVector(0, {static_cast<long long>(eps)});
  std::vector<long long> c(i + 1, 0);
  c[i - 1] = -1;
  c[i] = 1;
  return WeightVector(0, std::move(c));
}

DaggerWeight dagger_dictionary(const std::vector<long long>& a, int eps) {
  assert(valid_eps(eps));
  int k = static_cast<int>(a.size());
  assert(k >= 1);
  for (long long ai : a) assert(ai >= 0);
  std::vector<int> lam;
  for (int j = 1; j <= k - 1; ++j) {
    long long s = 0;  // a_1 + ... + a_{k-j}
    for (int i = 1; i <= k - j; ++i) s += a[i - 1];
    lam.push_back(static_cast<int>(s));
  }
  long long n = a[k - 1];
  for (int i = 1; i <= k - 1; ++i) n += (eps == 1 ? 2 : 1) * a[i - 1];
  return DaggerWeight{Partition(std::move(lam)), n};
}

std::optional<std::vector<long long>> dagger_inverse(const Partition& lambda,
                                                     long long n, int k, int eps) {
  assert(valid_eps(eps) && k >= 1);
  if (lambda.length() > k - 1) return std::nullopt;
  std::vector<long long> a(k, 0);
  // lambda_j = a_1 + ... + a_{k-j}  (1 <= j <= k-1)
  for (int i = 1; i <= k - 1; ++i) {
    long long v = lambda.part(k - i) - (i >= 2 ? lambda.part(k - i + 1) : 0);
    if (v < 0) return std::nullopt;
    a[i - 1] = v;
  }
  long long used = 0;
  for (int i = 1; i <= k - 1; ++i) used += (eps == 1 ? 2 : 1) * a[i - 1];
  long long ak = n - used;
  if (ak < 0) return std::nullopt;
  a[k - 1] = ak;
  return a;
}

}  // namespace tabcrys
