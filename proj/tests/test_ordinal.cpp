/* Copyright 2026 The ordproof Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "ordproof/ordinal.hpp"

using namespace ordproof;

namespace {

Ordinal O(const char* s) { return parse_ordinal(s); }

Ordinal from_poly(const oracle::Poly& p) {
  Ordinal r;
  for (std::size_t i = p.c.size(); i-- > 0;) {
    if (p.c[i]) r.terms.push_back(Summand{Ordinal(static_cast<int>(i)), p.c[i]});
  }
  return r;
}

oracle::Poly random_poly(std::mt19937& rng) {
  oracle::Poly p;
  std::size_t len = rng() % 4;
  for (std::size_t i = 0; i < len; ++i) p.c.push_back(rng() % 4);
  p.trim();
  return p;
}

}  // namespace

TEST_CASE("parse and print") {
  CHECK(O("w^w + w^2*3 + 5").str() == "w^w + w^2*3 + 5");
  CHECK(O("w + w^2") == O("w^2"));
  CHECK(O("w^(w+1)*2").str() == "w^(w + 1)*2");
  CHECK(O("w^w^w").depth() == 3);
  CHECK_THROWS_AS(O("w^"), OrdinalError);
  CHECK_THROWS_AS(parse_ordinal("w^w^w", 2), OrdinalError);
}

TEST_CASE("comparison") {
  CHECK(ord_cmp(O("w"), O("3")) == Ordering::Greater);
  CHECK(ord_cmp(O("w*2+1"), O("w*2+1")) == Ordering::Equal);
  CHECK(ord_cmp(O("w^w"), O("w^2*5+w")) == Ordering::Greater);
}

TEST_CASE("addition") {
  CHECK(O("w") + O("1") == O("w+1"));
  CHECK(O("1") + O("w") == O("w"));
  CHECK(O("w^2+w") + O("w*3") == O("w^2+w*4"));
}

TEST_CASE("meshing and three_pow") {
  CHECK(meshes(O("0"), O("w^w")));
  CHECK(meshes(O("w^2"), O("w*3+1")));
  CHECK_FALSE(meshes(O("1"), O("w")));
  CHECK(three_pow(O("w*2+1")) == O("w^2*3"));
  CHECK(three_pow(O("0")) == O("1"));
  CHECK(three_pow(O("4")) == O("81"));
  CHECK_THROWS_AS(three_pow(O("w^2")), OrdinalError);
}

TEST_CASE("fundamental sequences") {
  CHECK(fund_one(O("0"), 7) == O("0"));
  CHECK(fund_one(O("w"), 1) == O("2"));
  CHECK(fund_one(O("w^2"), 0) == O("w"));
  CHECK(fund_one(O("w^w"), 1) == O("w^2"));
  CHECK(fund_one(O("w*5+3"), 9) == O("w*5+2"));
  CHECK(fund_one(O("w*5"), 9) == O("w*4+10"));
  CHECK(fund_one(omega_tower(3), 2) == O("w^w^3"));
  CHECK(fund_iter(O("w+4"), 0, 0) == O("w+4"));
  CHECK(fund_iter(O("w"), 1, 2) == O("1"));
  CHECK(fund_iter(O("w*2"), 0, 3) == O("1"));
}

TEST_CASE("steps_to and num_bound") {
  CHECK(steps_to(O("0"), 3, O("0")) == BigInt(0));
  CHECK(steps_to(O("w"), 1, O("0")) == BigInt(3));
  CHECK_FALSE(steps_to(O("w"), 0, O("w*2")).has_value());
  CHECK(num_bound(O("0"), 5) == 0);
  CHECK(num_bound(O("w"), 1) == 3);
  CHECK(num_bound(O("w^2*2+3"), 0) == 11);
}

TEST_CASE("fast descent agrees with iteration beyond w^w") {
  const char* as[] = {"w^w", "w^w*2 + w^3 + 1", "w^(w+1)", "w^w^2", "w^(w*2)+w"};
  for (const char* s : as) {
    Ordinal a = O(s);
    for (int n = 0; n <= 2; ++n) {
      for (int x = 0; x < 60; x += 7) {
        Ordinal mid = fund_iter(a, n, x);
        CHECK(steps_to(a, n, mid) == steps_to_naive(a, n, mid));
        CHECK(reaches(a, n, mid));
        Ordinal off = mid + Ordinal(1);
        if (off < a) CHECK(reaches(a, n, off) == steps_to(a, n, off).has_value());
        Ordinal low = fund_iter(a, n, x + 1) + Ordinal::omega();
        if (low < a) CHECK(reaches(a, n, low) == steps_to(a, n, low).has_value());
      }
    }
  }
}

TEST_CASE("towers") {
  CHECK(omega_tower(0) == O("1"));
  CHECK(omega_tower(1) == O("w"));
  CHECK(omega_tower(2) == O("w^w"));
}

TEST_CASE("agreement with the polynomial oracle") {
  std::mt19937 rng(7);
  for (int i = 0; i < 2000; ++i) {
    oracle::Poly a = random_poly(rng), b = random_poly(rng);
    Ordinal oa = from_poly(a), ob = from_poly(b);
    int c = oracle::cmp(a, b);
    Ordering expect = c < 0 ? Ordering::Less : c == 0 ? Ordering::Equal
                                                      : Ordering::Greater;
    CHECK(ord_cmp(oa, ob) == expect);
    CHECK(oa + ob == from_poly(oracle::add(a, b)));
    std::uint64_t n = rng() % 4;
    CHECK(fund_one(oa, n) == from_poly(oracle::fund(a, n)));
    CHECK(num_bound(oa, n) == oracle::num(a, n));
    auto x = steps_to(oa, n, 0);
    REQUIRE(x.has_value());
    CHECK(*x <= oracle::num(a, n));
    CHECK(fund_iter(oa, n, oracle::num(a, n)).is_zero());
    CHECK(descent_length(oa, n) == *x);
    Ordinal mid = fund_iter(oa, n, rng() % 12);
    CHECK(steps_to(oa, n, mid) == steps_to_naive(oa, n, mid));
    CHECK(steps_to(oa, n, ob) == steps_to_naive(oa, n, ob));
    CHECK(reaches(oa, n, ob) == steps_to_naive(oa, n, ob).has_value());
    CHECK(reaches(oa, n, mid));
  }
}
