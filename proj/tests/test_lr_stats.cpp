#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "helpers.hpp"
#include "tabcrys/core.hpp"
#include "tabcrys/crystal.hpp"
#include "tabcrys/lr.hpp"
#include "tabcrys/stats.hpp"
#include "tabcrys/tableau.hpp"

using namespace tabcrys;
using testutil::part;
using testutil::tab;

TEST_CASE("lattice words") {
  CHECK(is_lattice({}));
  CHECK(is_lattice({1}));
  CHECK(!is_lattice({2}));
  CHECK(is_lattice({1, 1, 2, 1}));
  CHECK(is_lattice({1, 2, 1, 2}));
  CHECK(!is_lattice({1, 2, 2}));
  CHECK(!is_lattice({0}));
}

TEST_CASE("LR recognition and content") {
  Tableau u = tab("1,4,.,.,./2,3,.,./1,2/1");
  CHECK(is_lr(u));
  CHECK(content_partition(u) == part({3, 2, 1, 1}));
  CHECK(is_lr(Tableau{}));

  // Same shape, entries permuted so the column word starts with a 2.
  Tableau bad = tab("1,2,./2");
  CHECK(bad.is_semistandard());
  CHECK(!is_lr(bad));
}

TEST_CASE("LR enumeration and coefficients") {
  auto single = enumerate_lr(part({2, 1}), part({1}), part({1, 1}));
  REQUIRE(single.size() == 1);
  // The column word reads the upper-row cell first, so the 1 sits there.
  CHECK(single[0].entry(2, 1) == 1);
  CHECK(single[0].entry(1, 2) == 2);

  CHECK(lr_coefficient(part({2, 1}), part({1}), part({2})) == 1);
  CHECK(lr_coefficient(part({3, 2, 1}), part({2, 1}), part({2, 1})) == 2);
  CHECK(lr_coefficient(part({3, 1}), part({2, 1}), part({1})) == 1);
  CHECK(lr_coefficient(part({2, 2}), part({2}), part({1})) == 0);  // size mismatch
  CHECK(lr_coefficient(part({3, 1}), Partition{}, part({3, 1})) == 1);
  CHECK(lr_coefficient(part({3, 1}), part({3, 1}), Partition{}) == 1);

  for (const auto& v : enumerate_lr(part({3, 2, 1}), part({2, 1}), part({2, 1}))) {
    CHECK(v.outer() == part({3, 2, 1}));
    CHECK(v.inner() == part({2, 1}));
    CHECK(is_lr(v));
    CHECK(content_partition(v) == part({2, 1}));
  }

  // Symmetry in the two lower arguments.
  for (const auto& lambda : partitions_of(5, 4, 3)) {
    for (const auto& mu : partitions_up_to(5, 4, 3)) {
      if (!lambda.contains(mu)) continue;
      for (const auto& nu : partitions_of(static_cast<int>(lambda.size() - mu.size()), 4, 3)) {
        CAPTURE(lambda.to_string());
        CAPTURE(mu.to_string());
        CAPTURE(nu.to_string());
        CHECK(lr_coefficient(lambda, mu, nu) == lr_coefficient(lambda, nu, mu));
      }
    }
  }
}

TEST_CASE("shape straightening bijection") {
  Tableau u = tab("2,3,.,.,./1,2,3,./1,1,2/1");
  Tableau v = tab("2,3,3,4/1,2,3/1,2");
  CHECK(sharp(u) == v);
  CHECK(sharp_inverse(v, part({3, 1})) == u);

  for (const auto& lambda : {part({3, 2, 1}), part({4, 2}), part({3, 3, 1})}) {
    for (const auto& mu : {Partition{}, part({1}), part({2, 1})}) {
      if (!lambda.contains(mu)) continue;
      for (const auto& nu :
           partitions_of(static_cast<int>(lambda.size() - mu.size()), 4, 4)) {
        for (const auto& U : enumerate_lr(lambda, mu, nu)) {
          CAPTURE(U.canonical());
          Tableau V = sharp(U);
          CHECK(!V.is_skew());
          CHECK(V.outer() == nu);
          CHECK(V.is_semistandard());
          // Inserting the straightened tableau into the highest filling of mu
          // rebuilds the highest filling of lambda.
          CHECK(insert_tableau(Tableau::highest(mu), V).result == Tableau::highest(lambda));
          CHECK(sharp_inverse(V, mu) == U);
          // Row-count duality under transposed indices.
          for (int i = 1; i <= V.rows(); ++i) {
            for (int k = 1; k <= static_cast<int>(U.content().size()); ++k) {
              long long in_v = 0, in_u = 0;
              for (int j = V.inner().part(i) + 1; j <= V.outer().part(i); ++j)
                in_v += V.entry(i, j) == k;
              for (int j = U.inner().part(k) + 1; j <= U.outer().part(k); ++j)
                in_u += U.entry(k, j) == i;
              CHECK(in_v == in_u);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("chain statistic on pinned tableaux") {
  Tableau u = tab("1,4,.,.,./2,3,.,./1,2/1");
  CHECK(delta(u, 1) == Frac::whole(8));
  CHECK(delta(u, 2) == Frac::whole(4));

  Tableau u2 = tab("2,3,.,.,.,./2,.,./1,1");
  CHECK(delta(u2, 2) == Frac::whole(4));
  CHECK(delta(u2, 1) == Frac::whole(8));

  CHECK(delta(Tableau{}, 1) == Frac::whole(0));
  // One cell after two inner columns: the chain through it beats the empty one.
  CHECK(delta(tab("1,.,."), 1) == Frac::whole(4));
  CHECK(delta(tab("1,.,."), 2) == Frac::whole(2));

  // Highest-weight fillings: the bottom row is the best chain.
  for (const auto& shape : partitions_up_to(5, 4, 4)) {
    for (int eps : {1, 2}) {
      CAPTURE(shape.to_string());
      CHECK(delta(Tableau::highest(shape), eps) == Frac(2 * shape.first(), eps));
    }
  }
}

TEST_CASE("chain statistic against the subword oracle") {
  testutil::Rng rng(4242);
  auto alphabet = GradedAlphabet::split(3, 0);
  int checked = 0;
  for (const auto& outer : partitions_of(5, 4, 3)) {
    for (const auto& inner : partitions_up_to(3, 4, 3)) {
      if (!outer.contains(inner)) continue;
      auto pool = enumerate_sst(outer, inner, alphabet);
      for (const auto& U : pool) {
        if (rng.below(3) != 0) continue;  // sample a third of the pool
        long long mass_col = testutil::brute_delta_mass(U, true);
        long long mass_row = testutil::brute_delta_mass(U, false);
        CAPTURE(U.canonical());
        CHECK(mass_col == mass_row);  // both reading orders give the same best
        for (int eps : {1, 2}) CHECK(delta(U, eps) == Frac(mass_col, eps));
        ++checked;
      }
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("raise-count statistic") {
  CHECK(nabla(tab("1"), 1) == 1);
  CHECK(nabla(tab("1,1"), 1) == 2);
  CHECK(nabla(tab("1,1"), 2) == 1);
  CHECK(nabla(Tableau{}, 1) == 0);
  CHECK(nabla(Tableau{}, 2) == 0);

  // Against an independent loop over the public raising operator.
  for (const auto& lambda : {part({4, 2}), part({3, 2, 1}), part({2, 2})}) {
    for (const auto& mu : {Partition{}, part({1}), part({2})}) {
      if (!lambda.contains(mu)) continue;
      for (const auto& nu :
           partitions_of(static_cast<int>(lambda.size() - mu.size()), 4, 4)) {
        for (int eps : {1, 2}) {
          if (!is_eps_scaled(nu, eps)) continue;
          for (const auto& U : enumerate_lr(lambda, mu, nu)) {
            CAPTURE(U.canonical());
            CAPTURE(eps);
            long long count = 0;
            for (auto s = std::optional<Tableau>(sharp(U)); (s = zero_raise(*s, eps));)
              ++count;
            CHECK(nabla(U, eps) == count);
          }
        }
      }
    }
  }
}
