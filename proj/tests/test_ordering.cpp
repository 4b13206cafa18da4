// Copyright 2026 The rws Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include "doctest.h"
#include "rws/error.hpp"
#include "rws/ordering.hpp"
#include "support.hpp"

using namespace rws;
using rws::test::abc;
using rws::test::W;

namespace {
  // Shortlex written out directly: length, then the first differing rank.
  int shortlex_oracle(LetterOrder const& o, Word const& x, Word const& y) {
    if (x.size() != y.size()) {
      return x.size() < y.size() ? -1 : 1;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] != y[i]) {
        return o.rank(x[i]) < o.rank(y[i]) ? -1 : 1;
      }
    }
    return 0;
  }

  int sign(std::strong_ordering c) {
    return c < 0 ? -1 : c > 0 ? 1 : 0;
  }
}  // namespace

TEST_CASE("interleaved order") {
  auto o = LetterOrder::interleaved(2);
  auto a = test::abc(2);
  CHECK(o.descending() == W(a, "a a^-1 b b^-1"));
  CHECK(o.rank(Letter(0, 1)) == 3);
  CHECK(o.rank(Letter(1, -1)) == 0);
}

TEST_CASE("compare_shortlex examples") {
  auto a  = abc();
  auto o  = LetterOrder::interleaved(3);
  CHECK(compare_shortlex(o, W(a, "a a"), W(a, "a b")) > 0);
  CHECK(compare_shortlex(o, W(a, "a b"), W(a, "a")) > 0);
  CHECK(compare_shortlex(o, W(a, "a c b"), W(a, "b a c")) > 0);
  CHECK(compare_shortlex(o, W(a, "b"), W(a, "b")) == 0);
  CHECK(compare_shortlex(o, Word{}, W(a, "c^-1")) < 0);
}

TEST_CASE("compare_shortlex matches the oracle and is total") {
  std::mt19937_64 rng(17);
  auto            o = test::random_paired_order(rng, 3);
  for (int i = 0; i < 3000; ++i) {
    auto x = test::random_word(rng, 3, rng() % 4, false);
    auto y = test::random_word(rng, 3, rng() % 4, false);
    auto c = compare_shortlex(o, x, y);
    CHECK(sign(c) == shortlex_oracle(o, x, y));
    CHECK((c == 0) == (x == y));
    CHECK(sign(compare_shortlex(o, y, x)) == -sign(c));
  }
}

TEST_CASE("orient") {
  auto a = abc();
  auto o = LetterOrder::interleaved(3);
  auto r = orient(o, W(a, "a b"), W(a, "b a"));
  REQUIRE(r);
  CHECK(r->lhs == W(a, "a b"));
  CHECK(r->rhs == W(a, "b a"));
  CHECK_FALSE(orient(o, W(a, "a b"), W(a, "a b")));
  auto s = orient(o, W(a, "b a c"), W(a, "a c b"));
  REQUIRE(s);
  CHECK(s->lhs == W(a, "a c b"));
  CHECK(s->rhs == W(a, "b a c"));

  std::mt19937_64 rng(23);
  for (int i = 0; i < 500; ++i) {
    auto x = test::random_word(rng, 3, rng() % 4, false);
    auto y = test::random_word(rng, 3, rng() % 4, false);
    CHECK(orient(o, x, y) == orient(o, y, x));
  }
}

TEST_CASE("LetterOrder validation") {
  auto a = test::abc(2);
  CHECK_THROWS_AS(LetterOrder(W(a, "a a^-1 b")), Error);
  CHECK_THROWS_AS(LetterOrder(W(a, "a a b b^-1")), Error);
  CHECK_NOTHROW(LetterOrder(W(a, "b^-1 a b a^-1")));
}

TEST_CASE("parse_order and format_order") {
  auto a = abc();
  auto full = parse_order("order: b > b^-1 > a > a^-1 > c > c^-1", a);
  CHECK(full.descending() == W(a, "b b^-1 a a^-1 c c^-1"));
  CHECK(format_order(full, a) == "b > b^-1 > a > a^-1 > c > c^-1");
  CHECK(parse_order(format_order(full, a), a) == full);

  auto shorthand = parse_order("a>b>c", a);
  CHECK(shorthand == LetterOrder::interleaved(3));
  CHECK(parse_order("c > a > b", a).descending()
        == W(a, "c c^-1 a a^-1 b b^-1"));

  CHECK_THROWS_AS(parse_order("a > a > b", a), Error);
  CHECK_THROWS_AS(parse_order("a > b", a), Error);
  CHECK_THROWS_AS(parse_order("a > > b > c", a), Error);
  CHECK_THROWS_AS(parse_order("a b > c", a), Error);
  CHECK_THROWS_AS(parse_order("a > b > z", a), Error);
}
