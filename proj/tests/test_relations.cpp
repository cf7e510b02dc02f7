/*
 *   Copyright 2026 The semirings authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace semirings;
using namespace semirings::test;

TEST_CASE("all five relations are universal on a skew-ring", "[relations]") {
  for (auto s : {z2(), z_ring(3), s3_null()}) {
    auto u = BinRelation::universal(s.order());
    REQUIRE(green_l(s) == u);
    REQUIRE(green_r(s) == u);
    REQUIRE(green_j(s) == u);
    REQUIRE(green_h(s) == u);
    REQUIRE(green_d(s) == u);
  }
  auto t1 = FiniteSemiring::validated(1, {0}, {0});
  REQUIRE(green_j(t1) == BinRelation::universal(1));
}

TEST_CASE("on M4 the R+-classes follow the first coordinate and L+ is "
          "universal",
          "[relations]") {
  auto s = m4();  // elements (i*2+g): 0=(o,0) 1=(o,1) 2=(i,0) 3=(i,1)
  auto r = green_r(s);
  REQUIRE(r.to_partition() == Partition::from_class_ids({0, 0, 1, 1}));
  REQUIRE(green_l(s) == BinRelation::universal(4));
}

TEST_CASE("starred relations coincide with the plain ones on completely "
          "regular instances",
          "[relations]") {
  for (auto const& c : corpus()) {
    if (!is_completely_regular_semiring(c.s)) {
      continue;
    }
    CAPTURE(c.name);
    REQUIRE(star_l(c.s) == green_l(c.s));
    REQUIRE(star_r(c.s) == green_r(c.s));
    REQUIRE(star_j(c.s) == green_j(c.s));
    REQUIRE(star_h(c.s) == green_h(c.s));
    REQUIRE(star_d(c.s) == green_d(c.s));
  }
}

TEST_CASE("starred relations on the nil and b-lattice examples",
          "[relations]") {
  REQUIRE(star_j(n2()) == BinRelation::universal(2));
  REQUIRE(star_j(boolean_blattice()) == BinRelation::identity(2));
  REQUIRE(star_h(boolean_blattice()) == BinRelation::identity(2));
}

TEST_CASE("relation algebra basics", "[relations]") {
  auto r = BinRelation(3);
  r.set(0, 1);
  r.set(1, 2);
  r.set(2, 0);
  auto tc = transitive_closure(r);
  REQUIRE(tc == BinRelation::universal(3));
  REQUIRE(compose(BinRelation::identity(3), r) == r);
  REQUIRE(compose(r, BinRelation::identity(3)) == r);
  REQUIRE_THROWS_AS(compose(BinRelation(2), BinRelation(3)), SemiringError);
  REQUIRE(!r.is_equivalence());
  REQUIRE(BinRelation::universal(3).is_equivalence());
}

TEST_CASE("intersecting *L+ and *R+ gives *H+ across the corpus",
          "[relations]") {
  for (auto const& c : corpus()) {
    CAPTURE(c.name);
    REQUIRE(intersect(star_l(c.s), star_r(c.s)) == star_h(c.s));
    REQUIRE(intersect(green_l(c.s), green_r(c.s)) == green_h(c.s));
  }
}

TEST_CASE("Green's relations are congruences of the multiplicative reduct",
          "[relations]") {
  for (auto const& c : corpus()) {
    CAPTURE(c.name);
    for (auto rel : {green_l(c.s), green_r(c.s), green_j(c.s), green_h(c.s)}) {
      for (int a = 0; a < c.s.order(); ++a) {
        for (int b = 0; b < c.s.order(); ++b) {
          if (!rel.get(a, b)) {
            continue;
          }
          for (int x = 0; x < c.s.order(); ++x) {
            REQUIRE(rel.get(c.s.mul(a, x), c.s.mul(b, x)));
            REQUIRE(rel.get(c.s.mul(x, a), c.s.mul(x, b)));
          }
        }
      }
    }
  }
}

TEST_CASE("L+ is additively right-compatible and R+ left-compatible",
          "[relations]") {
  for (auto const& c : corpus()) {
    CAPTURE(c.name);
    auto l = green_l(c.s);
    auto r = green_r(c.s);
    for (int a = 0; a < c.s.order(); ++a) {
      for (int b = 0; b < c.s.order(); ++b) {
        for (int x = 0; x < c.s.order(); ++x) {
          if (l.get(a, b)) {
            REQUIRE(l.get(c.s.add(a, x), c.s.add(b, x)));
          }
          if (r.get(a, b)) {
            REQUIRE(r.get(c.s.add(x, a), c.s.add(x, b)));
          }
        }
      }
    }
  }
}

TEST_CASE("*D+ equals *J+ and is an equivalence on quasi completely regular "
          "instances",
          "[relations]") {
  for (auto const& c : qcr_corpus()) {
    CAPTURE(c.name);
    auto d = star_d(c.s);
    REQUIRE(d == star_j(c.s));
    REQUIRE(d.is_equivalence());
  }
}

TEST_CASE("relations convert to partitions only when equivalences",
          "[relations]") {
  auto r = BinRelation(2);
  r.set(0, 1);
  REQUIRE_THROWS_AS(r.to_partition(), SemiringError);
  REQUIRE(BinRelation::from_partition(Partition::universal(3))
          == BinRelation::universal(3));
}
