#pragma once
// Littlewood-Richardson tableaux over the positive integers: semistandard
// skew fillings whose column reading word satisfies the lattice (ballot)
// condition, i.e. every prefix holds at least as many i's as (i+1)'s.

#include <vector>

#include "tabcrys/core.hpp"
#include "tabcrys/tableau.hpp"

namespace tabcrys {

bool is_lattice(const Word& w);
bool is_lr(const Tableau& U);

// The content of a lattice word is a partition; of an LR tableau likewise.
Partition content_partition(const Tableau& U);

// All LR tableaux of shape lambda/mu and content nu, sorted by column word.
std::vector<Tableau> enumerate_lr(const Partition& lambda, const Partition& mu,
                                  const Partition& nu);
long long lr_coefficient(const Partition& lambda, const Partition& mu,
                         const Partition& nu);

// The shape-straightening bijection between LR tableaux of shape lambda/mu,
// content nu and straight-shape tableaux V of shape nu whose insertion into
// the highest-weight tableau of shape mu yields the highest-weight tableau of
// shape lambda. Row counts correspond under transposed indices: the number of
// k's in row i of sharp(U) equals the number of i's in row k of U.
Tableau sharp(const Tableau& U);
Tableau sharp_inverse(const Tableau& V, const Partition& mu);

}  // namespace tabcrys
