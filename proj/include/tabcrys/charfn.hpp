#pragma once
// Exact sparse character arithmetic: polynomials in a level marker q and one
// variable per alphabet letter, with arbitrary-precision coefficients and a
// total-degree cutoff in the x-variables carried by every value. Schur and
// super Schur polynomials, the level-n characters of the tableau model, the
// expansions that the branching and product rules predict for them, the
// truncated Littlewood product identity, and a finite-rank Weyl dimension
// oracle.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tabcrys/core.hpp"
#include "tabcrys/tableau.hpp"

namespace tabcrys {

using BigInt = boost::multiprecision::cpp_int;

struct CharacterPoly {
  // Values with this cutoff are exact polynomials, not truncated series.
  static constexpr int kExactDegree = 1 << 28;

  int degree_cutoff = kExactDegree;
  // (q exponent, x exponent vector with trailing zeros stripped) -> coefficient
  std::map<std::pair<long long, std::vector<int>>, BigInt> terms;

  static CharacterPoly zero(int cutoff = kExactDegree);
  static CharacterPoly constant(const BigInt& c, int cutoff = kExactDegree);

  // Drops monomials whose x-degree exceeds the cutoff; erases zero terms.
  void add_term(long long q, std::vector<int> exps, const BigInt& c);
  CharacterPoly& add_scaled(const CharacterPoly& o, const BigInt& c);
  CharacterPoly operator*(const CharacterPoly& o) const;  // cutoff = min
  CharacterPoly shifted_q(long long dq) const;            // multiply by q^dq

  BigInt coefficient(long long q, std::vector<int> exps) const;
  BigInt coefficient_sum() const;  // total count when all coefficients count
  long long term_count() const { return static_cast<long long>(terms.size()); }

  bool operator==(const CharacterPoly&) const = default;
  std::string to_string() const;  // one sorted monomial per line
  std::string to_json() const;
};

// Sum of x^T over semistandard fillings of outer/inner in the alphabet.
CharacterPoly super_schur(const Partition& outer, const Partition& inner,
                          const GradedAlphabet& a);

// q^n times the generating series of the pairs (S, T): S of eps-scaled
// straight shape, T of shape lambda, recording delta at most n; truncated to
// x-degree D. Requires 2*lambda_1 <= eps*n.
CharacterPoly super_character_Sx(const Partition& lambda, long long n, int eps,
                                 const GradedAlphabet& a, int D);

// Coefficientwise identities through degree D, the right sides computed from
// the Levi branching count and the two-step pair rule respectively.
bool verify_branching_expansion(const Partition& lambda, long long n, int eps,
                                const GradedAlphabet& a, int D);
bool verify_product_expansion(const Partition& mu, long long m, const Partition& nu,
                              long long n, int eps, const GradedAlphabet& a, int D);

// Dimension of the rank-k irreducible with fundamental-weight coefficients
// a_1..a_k (eps = 1: odd orthogonal; eps = 2: symplectic), by the product
// formula over the explicit positive roots. k >= 1.
BigInt weyl_dimension(int k, int eps, const std::vector<long long>& a);

// Both sides of the scaled-partition product identity, truncated to total
// degree D in `vars` variables: the geometric product expansion, and the sum
// of Schur polynomials of eps-scaled shapes.
CharacterPoly littlewood_product_side(int eps, int vars, int D);
CharacterPoly littlewood_schur_side(int eps, int vars, int D);

}  // namespace tabcrys
