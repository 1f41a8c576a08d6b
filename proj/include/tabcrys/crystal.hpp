#pragma once
// The highest-weight tableau model: vertices are pairs (S, T) with S a
// straight eps-scaled shape and T of the fixed shape lambda. Operators are the
// zero-node box/domino moves on S and the word operators on the concatenated
// reading words for i >= 1. Truncation to level n keeps the vertices whose
// insertion recording tableau has delta at most n; truncation to rank k
// restricts the operator alphabet to {0, ..., k-1}.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tabcrys/core.hpp"
#include "tabcrys/stats.hpp"
#include "tabcrys/tableau.hpp"

namespace tabcrys {

// --- zero-node operators on the left tableau ------------------------------
// eps = 1 moves single boxes filled with 1; eps = 2 moves 1x2 dominoes of 1's
// across column pairs. The lowering operator is total: the sign sequence ends
// in an unbounded run of '+' at empty columns which never cancels.
std::optional<Tableau> zero_raise(const Tableau& S, int eps);
Tableau zero_lower(const Tableau& S, int eps);
long long zero_raise_count(const Tableau& S, int eps);
// Finite part of the sign sequence, leftmost column first (one virtual empty
// column included); for tests and display.
std::string zero_signature(const Tableau& S, int eps);

// --- vertices --------------------------------------------------------------
struct CrystalVertex {
  Tableau S, T;
  int eps = 1;
  long long level = 0;

  WeightVector weight() const;
  std::string key() const;  // canonical pair serialization
  bool operator==(const CrystalVertex&) const = default;
};

std::optional<CrystalVertex> lower(const CrystalVertex& v, int i);
std::optional<CrystalVertex> raise(const CrystalVertex& v, int i);
long long eps_i(const CrystalVertex& v, int i);   // raise count
long long phi_i(const CrystalVertex& v, int i);   // pairing + eps_i
// delta of the recording tableau of inserting T into S; the level bound.
Frac member_delta(const CrystalVertex& v);

// --- graphs ---------------------------------------------------------------
struct CrystalEdge {
  int from = 0, to = 0, i = 0;
};

struct CrystalGraph {
  Partition lambda;
  long long level = 0;
  int eps = 1;
  int rank = 0;  // operators 0..rank-1; tableau entries at most rank
  std::vector<CrystalVertex> vertices;
  std::vector<CrystalEdge> edges;
  int highest = -1;

  int find(const std::string& key) const;
  std::optional<int> lower_to(int v, int i) const;
  std::optional<int> raise_to(int v, int i) const;
  long long graph_eps(int v, int i) const;  // raise-chain length inside graph
  long long graph_phi(int v, int i) const;  // lower-chain length inside graph

  std::string to_dot() const;
  std::string to_json() const;

 private:
  mutable std::map<std::pair<int, int>, int> down_, up_;
  void index_edges() const;
};

// Breadth-first closure of the lowering operators from the highest-weight
// vertex (empty S, highest T of shape lambda), keeping vertices within the
// level bound. Requires (lambda, n) in the weight family and, at finite rank,
// length(lambda) <= rank (entries of T never exceed rank under the truncated
// operator alphabet).
CrystalGraph generate_crystal(const Partition& lambda, long long n, int eps, int rank);

// --- decomposition and branching -------------------------------------------
// Multiplicities of the connected pieces of the tensor square family:
// bound-side criterion from the highest-weight pair analysis. Keys are the
// lambda of the resulting (lambda, m+n).
std::map<Partition, long long> tensor_decompose(const Partition& mu, long long m,
                                                const Partition& nu, long long n,
                                                int eps, int rank);

// Pairs (U, V) counting the same multiplicities through the two-step LR rule.
struct LrPair {
  Tableau U, V;
  Partition eta, tau;
};
std::vector<LrPair> enumerate_lr_pairs(const Partition& lambda, const Partition& mu,
                                       const Partition& nu, long long m, long long n,
                                       int eps);

// Branching to the upper-triangular Levi subalgebra: LR tableaux of shape
// sigma/tau with content lambda, tau eps-scaled, delta at most n.
std::vector<Tableau> branch_levi(const Partition& sigma, const Partition& lambda,
                                 long long n, int eps);

}  // namespace tabcrys
