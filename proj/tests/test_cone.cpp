/*
   Copyright 2026 The relcone Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "relcone/cone.hpp"
#include "relcone/errors.hpp"
#include "test_support.hpp"

using namespace relcone;
using relcone::testing::family;
using relcone::testing::S;

namespace {

REVector ray6_vector() { return REVector::from_ordered(3, {1, 0, 0, 1, 1, 1, 1}); }

}  // namespace

TEST_CASE("Bits rejects NaN and negatives") {
  CHECK_THROWS_AS(Bits::finite(std::nan("")), InputError);
  CHECK_THROWS_AS(Bits::finite(-0.5), InputError);
  CHECK_THROWS_AS(Bits::finite(std::numeric_limits<double>::infinity()), InputError);
  CHECK(Bits::infinity().is_infinite());
  CHECK(less_than(Bits::finite(1e300), Bits::infinity()));
  CHECK_FALSE(less_than(Bits::infinity(), Bits::infinity()));
  CHECK_THROWS_AS(REVector::from_ordered(2, {1, 0}), InputError);
}

TEST_CASE("check_membership") {
  SUBCASE("Ray 6 is a member") {
    const auto r = check_membership(ray6_vector());
    CHECK(r.member);
    CHECK(r.violations.empty());
    CHECK(r.infinite_part_ok);
  }
  SUBCASE("direct monotonicity failure") {
    const auto r = check_membership(REVector::from_ordered(2, {1, 0, 0.5}));
    CHECK_FALSE(r.member);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].superset == S("AB"));
    CHECK(r.violations[0].subset == S("A"));
    CHECK(r.violations[0].superset_value == 0.5);
    CHECK(r.violations[0].subset_value == 1.0);
  }
  SUBCASE("violations are exhaustive") {
    // v_ABC = 0 below every positive entry: 6 comparable pairs fail.
    const auto r = check_membership(REVector::from_ordered(3, {1, 1, 1, 1, 1, 1, 0}));
    CHECK(r.violations.size() == 6);
  }
  SUBCASE("infinite entries on an up-set") {
    REVector v(2);
    v.set(S("A"), Bits::infinity());
    v.set(S("AB"), Bits::infinity());
    const auto r = check_membership(v);
    CHECK(r.member);
    CHECK(r.infinite_part_ok);
  }
  SUBCASE("infinite entries not upward closed") {
    REVector v(2);
    v.set(S("A"), Bits::infinity());
    v.set(S("AB"), Bits::finite(3.0));
    const auto r = check_membership(v);
    CHECK_FALSE(r.member);
    CHECK_FALSE(r.infinite_part_ok);
    CHECK(r.violations.empty());
  }
}

TEST_CASE("layer_cake_decompose") {
  SUBCASE("Ray 6 is a single term") {
    const auto d = layer_cake_decompose(ray6_vector());
    REQUIRE(d.terms.size() == 1);
    CHECK(d.terms[0].coefficient == 1.0);
    CHECK(d.terms[0].upset.members() == family({"A", "AB", "AC", "BC", "ABC"}));
  }
  SUBCASE("two levels") {
    const auto d = layer_cake_decompose(REVector::from_ordered(2, {0.5, 0, 2.0}));
    REQUIRE(d.terms.size() == 2);
    CHECK(d.terms[0].coefficient == 1.5);
    CHECK(d.terms[0].upset.members() == family({"AB"}));
    CHECK(d.terms[1].coefficient == 0.5);
    CHECK(d.terms[1].upset.members() == family({"A", "AB"}));
    // 1.5 (0,0,1) + 0.5 (1,0,1)
    CHECK(recompose(d) == REVector::from_ordered(2, {0.5, 0, 2.0}));
  }
  SUBCASE("zero vector") {
    CHECK(layer_cake_decompose(REVector(3)).terms.empty());
    CHECK(recompose(RayDecomposition{3, {}}) == REVector(3));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(layer_cake_decompose(REVector::from_ordered(2, {1, 0, 0.5})), DomainError);
    REVector v(2);
    v.set(S("AB"), Bits::infinity());
    CHECK_THROWS_AS(layer_cake_decompose(v), UnsupportedError);
  }
  SUBCASE("values within the merge tolerance share a level") {
    const double x = 1.0;
    const double y = 1.0 + 1e-14;
    const auto d = layer_cake_decompose(REVector::from_ordered(2, {x, 0, y}));
    CHECK(d.terms.size() == 1);
    const auto back = recompose(d);
    CHECK(std::abs(back.at(S("A")).value() - x) <= 1e-12);
    CHECK(std::abs(back.at(S("AB")).value() - y) <= 1e-12);
  }
}

TEST_CASE("recompose") {
  const UpSet ray6 = upward_closure(family({"A", "BC"}), 3);
  CHECK(recompose(RayDecomposition{3, {{1.0, ray6}}}) == ray6_vector());
  const UpSet ab = upward_closure(family({"AB"}), 2);
  const UpSet a = upward_closure(family({"A"}), 2);
  CHECK(recompose(RayDecomposition{2, {{1.5, ab}, {0.5, a}}}) ==
        REVector::from_ordered(2, {0.5, 0, 2.0}));
}

TEST_CASE("random cone members decompose and recompose") {
  relcone::testing::Rng rng(20261018);
  for (int n = 1; n <= 4; ++n) {
    const auto rays = enumerate_upsets(n);
    std::uniform_int_distribution<std::size_t> pick(0, rays.size() - 1);
    std::uniform_int_distribution<int> count(1, 5);
    std::uniform_real_distribution<double> coef(0.01, 5.0);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> sums(full_bits(n) + 1, 0.0);
      const int k = count(rng);
      for (int i = 0; i < k; ++i) {
        const double c = coef(rng);
        for (SubsetMask s : rays[pick(rng)].members()) sums[s.bits()] += c;
      }
      REVector v(n);
      for (std::uint32_t s = 1; s <= full_bits(n); ++s) v.set(SubsetMask(s), Bits::finite(sums[s]));
      REQUIRE(check_membership(v).member);

      const auto d = layer_cake_decompose(v);
      CHECK(relcone::testing::max_abs_diff(recompose(d), v) <= 1e-12);

      std::set<double> distinct;
      for (std::uint32_t s = 1; s <= full_bits(n); ++s) {
        if (sums[s] > 0) distinct.insert(sums[s]);
      }
      CHECK(d.terms.size() <= distinct.size());
      CHECK(distinct.size() <= full_bits(n));
      for (std::size_t i = 0; i < d.terms.size(); ++i) {
        CHECK(d.terms[i].coefficient > 0.0);
        if (i > 0) {
          CHECK(d.terms[i - 1].upset.is_subset_of(d.terms[i].upset));
          CHECK_FALSE(d.terms[i - 1].upset == d.terms[i].upset);
        }
      }
      for (const UpSet& level : level_sets(v)) CHECK(is_upset(level.members(), n));
    }
  }
}

TEST_CASE("indicators of up-sets are members; breaking a nested pair is rejected") {
  for (int n = 1; n <= 4; ++n) {
    for (const UpSet& u : enumerate_upsets(n)) {
      CHECK(check_membership(REVector::indicator(u)).member);
      for (SubsetMask m : minimal_sets(u)) {
        // Zeroing a minimal member leaves a smaller up-set (or zero).
        REVector shrunk = REVector::indicator(u);
        shrunk.set(m, Bits::finite(0.0));
        CHECK(check_membership(shrunk).member);

        for (SubsetMask s : u.members()) {
          if (s == m || !m.is_subset_of(s)) continue;
          REVector broken = REVector::indicator(u);
          broken.set(s, Bits::finite(0.0));
          const auto r = check_membership(broken);
          CHECK_FALSE(r.member);
          bool named = false;
          for (const auto& v : r.violations) named = named || (v.superset == s && v.subset == m);
          CHECK(named);
        }
      }
    }
  }
}
