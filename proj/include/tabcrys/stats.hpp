#pragma once
// The two statistics controlling level bounds: delta (maximal weighted
// weakly-decreasing chain through a skew tableau) and nabla (zero-node raise
// count of the straightened tableau).

#include "tabcrys/core.hpp"
#include "tabcrys/tableau.hpp"

namespace tabcrys {

// delta(U)/eps where delta(U) maximizes mu_k + 2r over chains of r cells whose
// entries weakly decrease, rows weakly decrease bottom-up-index-wise and
// columns strictly increase rightwards-index-wise along the chain, with the
// first cell in row k of the outer shape; the empty chain contributes mu_1.
// Integral whenever the inner shape has eps-divisible parts.
Frac delta(const Tableau& U, int eps);

// Number of zero-node raises admitted by sharp(U); requires an LR tableau
// whose content is eps-scaled.
long long nabla(const Tableau& U, int eps);

}  // namespace tabcrys
