#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <vector>

#include "helpers.hpp"
#include "tabcrys/core.hpp"

using namespace tabcrys;
using testutil::part;

TEST_CASE("partition construction normalizes and accesses parts") {
  Partition p({3, 1, 0, 0});
  CHECK(p.parts == std::vector<int>{3, 1});
  CHECK(p.length() == 2);
  CHECK(p.size() == 4);
  CHECK(p.part(1) == 3);
  CHECK(p.part(2) == 1);
  CHECK(p.part(3) == 0);  // beyond the length
  CHECK(p.first() == 3);
  CHECK(Partition{}.empty());
  CHECK(Partition{}.size() == 0);
}

TEST_CASE("partition text round trip") {
  CHECK(part({3, 1}).to_string() == "(3,1)");
  CHECK(Partition{}.to_string() == "(0)");

  auto p = Partition::parse("3,1");
  REQUIRE(p.has_value());
  CHECK(*p == part({3, 1}));
  CHECK(Partition::parse("(3,1)") == part({3, 1}));
  CHECK(Partition::parse("0") == Partition{});
  CHECK(Partition::parse("") == Partition{});
  CHECK(Partition::parse("3,1,0") == part({3, 1}));  // trailing zeros dropped
  for (const char* bad : {"1,3", "-1", "a", "3,0,1", "2,1.5"}) {
    CAPTURE(bad);
    CHECK(!Partition::parse(bad).has_value());
  }
}

TEST_CASE("partition conjugate, containment, scaling") {
  CHECK(part({3, 1}).conjugate() == part({2, 1, 1}));
  CHECK(Partition{}.conjugate() == Partition{});
  for (const auto& p : partitions_up_to(6)) {
    CAPTURE(p.to_string());
    CHECK(p.conjugate().conjugate() == p);
    CHECK(p.conjugate().size() == p.size());
  }
  CHECK(part({3, 2}).contains(part({2, 2})));
  CHECK(part({3, 2}).contains(Partition{}));
  CHECK(!part({3}).contains(part({1, 1})));
  CHECK(part({2, 1}).scaled(2) == part({4, 2}));
  CHECK(Partition{}.scaled(3) == Partition{});
}

TEST_CASE("partition enumeration") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(4, 2).size() == 3);      // largest part at most 2
  CHECK(partitions_of(4, -1, 2).size() == 3);  // at most two rows
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_up_to(3).size() == 7);
  for (const auto& p : partitions_of(5, 3, 2)) {
    CHECK(p.size() == 5);
    CHECK(p.first() <= 3);
    CHECK(p.length() <= 2);
  }

  auto between = partitions_between(part({1}), part({3, 2}), 3);
  CHECK(between.size() == 2);
  for (const auto& eta : between) {
    CHECK(eta.size() == 3);
    CHECK(eta.contains(part({1})));
    CHECK(part({3, 2}).contains(eta));
  }
}

TEST_CASE("scaling predicate and weight family bound") {
  CHECK(is_eps_scaled(part({4, 2}), 2));
  CHECK(!is_eps_scaled(part({2, 1}), 2));
  CHECK(is_eps_scaled(part({2, 1}), 1));
  CHECK(is_eps_scaled(Partition{}, 2));

  CHECK(in_weight_family(part({1}), 1, 2));   // 2 <= 2
  CHECK(!in_weight_family(part({1}), 1, 1));  // 2 > 1
  CHECK(in_weight_family(part({1}), 2, 1));
  CHECK(in_weight_family(Partition{}, 0, 1));
  CHECK(!in_weight_family(Partition{}, -1, 1));
}

TEST_CASE("fractions with denominator two") {
  CHECK(Frac::whole(3) == Frac(3, 1));
  CHECK(Frac(4, 2) == Frac::whole(2));  // reduced on construction
  CHECK(Frac(4, 2).is_integer());
  CHECK(Frac(4, 2).as_integer() == 2);
  CHECK(!Frac(3, 2).is_integer());
  CHECK(Frac(3, 2).to_string() == "3/2");
  CHECK(Frac::whole(-1).to_string() == "-1");
  CHECK(Frac(3, 2) < Frac::whole(2));
  CHECK(Frac::whole(1) <= Frac(3, 2));
  CHECK(Frac(3, 2) <= Frac(3, 2));
  CHECK(Frac(3, 2).as_double() == doctest::Approx(1.5));
}

TEST_CASE("graded alphabets") {
  auto pos = GradedAlphabet::positive();
  CHECK(pos.size() == -1);
  CHECK(pos.valid_letter(1000000));
  CHECK(!pos.valid_letter(0));
  CHECK(!pos.is_odd(5));
  CHECK(pos.letter_name(3) == "3");

  auto dual = GradedAlphabet::dual_negative();
  CHECK(dual.letter_name(2) == "-2");
  CHECK(!dual.is_odd(2));

  auto mixed = GradedAlphabet::split(2, 1);
  CHECK(mixed.size() == 3);
  CHECK(!mixed.is_odd(1));
  CHECK(!mixed.is_odd(2));
  CHECK(mixed.is_odd(3));
  CHECK(!mixed.valid_letter(4));

  auto custom = GradedAlphabet::graded({true, false});
  CHECK(custom.is_odd(1));
  CHECK(!custom.is_odd(2));
}

TEST_CASE("weight vectors, pairings, dominance") {
  WeightVector w(4, {2, 1, 0});
  CHECK(w.coeffs == std::vector<long long>{2, 1});  // trailing zero stripped
  CHECK(w.coeff(1) == 2);
  CHECK(w.coeff(3) == 0);
  CHECK(w.pair(1, 1) == 1);
  CHECK(w.pair(2, 1) == 1);
  CHECK(w.pair(3, 1) == 0);
  CHECK(w.pair(0, 1) == 0);  // 4 - 2*2
  CHECK(w.pair(0, 2) == 2);  // 4 - 2
  CHECK(w.is_dominant(1));
  CHECK(WeightVector(3, {2, 1}).pair(0, 1) == -1);
  CHECK(!WeightVector(3, {2, 1}).is_dominant(1));

  WeightVector sum(0, {});
  sum.add(WeightVector(1, {1}), 2).add(WeightVector(0, {0, 1}), -1);
  CHECK(sum == WeightVector(2, {2, -1}));
}

TEST_CASE("dominant weights and root steps") {
  auto w = dominant_weight(part({2, 1}), 4, 1);
  CHECK(w == WeightVector(4, {2, 1}));
  CHECK(w.is_dominant(1));

  CHECK(root_step(0, 1) == WeightVector(0, {1}));
  CHECK(root_step(0, 2) == WeightVector(0, {2}));
  CHECK(root_step(2, 1) == WeightVector(0, {0, -1, 1}));
  // Lowering at index 0 then raising the pairing back: alpha_0 lowers pair(0)
  // by 2 for both eps.
  for (int eps : {1, 2}) {
    WeightVector v = dominant_weight(part({2}), 4, eps);
    long long before = v.pair(0, eps);
    v.add(root_step(0, eps));
    CHECK(v.pair(0, eps) == before - 2);
  }
}

TEST_CASE("finite-rank weight dictionary") {
  auto d = dagger_dictionary({1, 1}, 1);
  CHECK(d.lambda == part({1}));
  CHECK(d.level == 3);
  auto d2 = dagger_dictionary({1, 1}, 2);
  CHECK(d2.lambda == part({1}));
  CHECK(d2.level == 2);
  auto d3 = dagger_dictionary({2, 0, 1}, 1);
  CHECK(d3.lambda == part({2, 2}));
  CHECK(d3.level == 5);

  // Round trip over a grid of fundamental-weight coordinates.
  for (int eps : {1, 2}) {
    for (int k = 1; k <= 3; ++k) {
      std::vector<long long> a(k, 0);
      auto next = [&]() {
        for (int i = 0; i < k; ++i) {
          if (a[i] < 2) {
            ++a[i];
            return true;
          }
          a[i] = 0;
        }
        return false;
      };
      do {
        auto dict = dagger_dictionary(a, eps);
        auto back = dagger_inverse(dict.lambda, dict.level, k, eps);
        CAPTURE(eps);
        CAPTURE(k);
        REQUIRE(back.has_value());
        CHECK(*back == a);
      } while (next());
    }
  }

  CHECK(!dagger_inverse(part({1, 1, 1}), 10, 3, 1).has_value());  // too many rows
  CHECK(!dagger_inverse(part({2}), 1, 2, 1).has_value());         // level too small
}
