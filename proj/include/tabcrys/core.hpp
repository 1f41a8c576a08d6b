#pragma once
// Basic combinatorial vocabulary: partitions, graded alphabets, words,
// weights for the two infinite-rank weight lattices (eps = 1 or 2), and a
// tiny exact fraction type for statistics that may be half-integral.

#include <cassert>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tabcrys {

// eps = 1 and eps = 2 select the two folded models everywhere below.
inline bool valid_eps(int eps) { return eps == 1 || eps == 2; }

// ---------------------------------------------------------------------------
// Partition: weakly decreasing positive parts. Trailing zeros are stripped on
// construction, so the empty partition is parts == {}.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int length() const { return static_cast<int>(parts.size()); }
  long long size() const;               // sum of parts
  int part(int i) const;                // 1-based, 0 beyond the length
  int first() const { return part(1); }
  bool empty() const { return parts.empty(); }

  Partition conjugate() const;
  bool contains(const Partition& mu) const;      // mu_i <= lambda_i for all i
  Partition scaled(int factor) const;            // multiply every part

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

  std::string to_string() const;                 // e.g. "(3,1)"; "(0)" if empty
  static std::optional<Partition> parse(const std::string& text);  // "3,1" or "0"
};

// All parts divisible by eps: the shapes that occur as left components of the
// model's vertices (every column length paired for eps = 2).
bool is_eps_scaled(const Partition& p, int eps);

// Dominance bound for a dominant weight built from (lambda, n): 2*lambda_1 <= eps*n.
bool in_weight_family(const Partition& lambda, long long n, int eps);

// Enumeration helpers (small sizes only).
std::vector<Partition> partitions_of(int n, int max_part = -1, int max_len = -1);
std::vector<Partition> partitions_up_to(int n, int max_part = -1, int max_len = -1);
// Partitions eta with mu contained in eta contained in lambda and |eta| = size.
std::vector<Partition> partitions_between(const Partition& mu, const Partition& lambda,
                                          long long size);

// ---------------------------------------------------------------------------
// GradedAlphabet: a totally ordered alphabet with a parity per letter.
// Letters are 1-based ranks into the order. The two infinite alphabets used by
// the model (positive integers, and their order-reversed negative duals) are
// all-even; finite alphabets carry explicit parities.
struct GradedAlphabet {
  bool infinite = true;            // ranks 1,2,3,... all even
  bool dual_display = false;       // print rank j as -j (the dual letters)
  std::vector<bool> odd;           // finite case: odd[r-1] for rank r

  int size() const { return infinite ? -1 : static_cast<int>(odd.size()); }
  bool is_odd(int letter) const {
    if (infinite) return false;
    assert(letter >= 1 && letter <= size());
    return odd[letter - 1];
  }
  bool valid_letter(int letter) const {
    return letter >= 1 && (infinite || letter <= size());
  }
  std::string letter_name(int letter) const;

  static GradedAlphabet positive();          // 1 < 2 < 3 < ...
  static GradedAlphabet dual_negative();     // -1 < -2 < -3 < ... (rank j ~ -j)
  static GradedAlphabet graded(std::vector<bool> odd_flags);
  // n_even even letters followed by n_odd odd letters.
  static GradedAlphabet split(int n_even, int n_odd);
};

using Word = std::vector<int>;

// ---------------------------------------------------------------------------
// Exact fraction with denominator 1 or 2 (all statistics are integers or
// half-integers). Stored reduced.
struct Frac {
  long long num = 0;
  int den = 1;

  Frac() = default;
  Frac(long long n, int d);
  static Frac whole(long long n) { return Frac(n, 1); }

  bool is_integer() const { return den == 1; }
  long long as_integer() const { assert(den == 1); return num; }
  double as_double() const { return static_cast<double>(num) / den; }
  std::string to_string() const;

  bool operator==(const Frac&) const = default;
  bool operator<=(const Frac& o) const { return num * o.den <= o.num * den; }
  bool operator<(const Frac& o) const { return num * o.den < o.num * den; }
};

// ---------------------------------------------------------------------------
// WeightVector: element n*Lam0 + sum_i c_i*eps_hat_i of the level-graded
// weight lattice. `coeffs` is indexed from 1 via coeff(i); trailing zeros are
// normalized away.
struct WeightVector {
  long long level = 0;
  std::vector<long long> coeffs;

  WeightVector() = default;
  WeightVector(long long lvl, std::vector<long long> c);

  long long coeff(int i) const;  // 1-based, 0 beyond stored length
  WeightVector& add(const WeightVector& o, long long mult = 1);

  // Pairing with the rescaled coroots h_i (i >= 0); exact integer for both eps.
  long long pair(int i, int eps) const;
  bool is_dominant(int eps) const;  // pair(i) >= 0 for all i >= 0

  bool operator==(const WeightVector&) const = default;
  std::string to_string() const;
};

// The dominant weight attached to (lambda, n); requires in_weight_family.
WeightVector dominant_weight(const Partition& lambda, long long n, int eps);
// Negative of the simple root alpha_i as a weight increment: applying the
// i-lowering operator adds root_step(i) to the weight.
WeightVector root_step(int i, int eps);

// ---------------------------------------------------------------------------
// Finite-rank dictionary: fundamental-weight coordinates (a_1..a_k) of the
// rank-k algebra <-> the pair (lambda, n). Inverse returns nullopt when the
// pair is not expressible at rank k.
struct DaggerWeight {
  Partition lambda;
  long long level = 0;
};
DaggerWeight dagger_dictionary(const std::vector<long long>& a, int eps);
std::optional<std::vector<long long>> dagger_inverse(const Partition& lambda,
                                                     long long n, int k, int eps);

}  // namespace tabcrys
