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
#include "rws/core.hpp"
#include "rws/error.hpp"
#include "support.hpp"

using namespace rws;
using rws::test::abc;
using rws::test::W;

namespace {
  // Cancels the rightmost adjacent inverse pair until none is left.
  Word cancel_rightmost(Word w) {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = w.size(); i-- > 1;) {
        if (w[i] == w[i - 1].inverse()) {
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(i - 1),
                  w.begin() + static_cast<std::ptrdiff_t>(i + 1));
          changed = true;
          break;
        }
      }
    }
    return w;
  }

  // Same, leftmost pair first.
  Word cancel_leftmost(Word w) {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] == w[i - 1].inverse()) {
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(i - 1),
                  w.begin() + static_cast<std::ptrdiff_t>(i + 1));
          changed = true;
          break;
        }
      }
    }
    return w;
  }

  bool has_adjacent_inverses(Word const& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i] == w[i - 1].inverse()) {
        return true;
      }
    }
    return false;
  }
}  // namespace

TEST_CASE("letters") {
  Letter a(0, 1);
  CHECK(a.positive());
  CHECK(a.inverse().sign() == -1);
  CHECK(a.inverse().inverse() == a);
  CHECK(a.inverse().generator() == 0);
  CHECK(Letter(3, -1).code() == 7);
}

TEST_CASE("alphabet") {
  auto a = abc();
  CHECK(a.size() == 3);
  CHECK(a.index("b") == 1);
  CHECK_THROWS_AS((void) a.index("z"), Error);
  CHECK_THROWS_AS(Alphabet({"a", "a"}), Error);
  CHECK_THROWS_AS(Alphabet({"a^"}), Error);
  CHECK_THROWS_AS(Alphabet({"x=y"}), Error);
  CHECK_THROWS_AS(Alphabet({"1"}), Error);
  CHECK_THROWS_AS(Alphabet({""}), Error);
  CHECK_NOTHROW(Alphabet({"x1", "gen_2"}));
}

TEST_CASE("free_reduce") {
  auto a = abc();
  CHECK(free_reduce(W(a, "a a^-1 b")) == W(a, "b"));
  CHECK(free_reduce(W(a, "a b b^-1 a^-1")).empty());
  CHECK(free_reduce(W(a, "a b c")) == W(a, "a b c"));
  CHECK(free_reduce(W(a, "a^-1 a a")) == W(a, "a"));
  CHECK(free_reduce(Word{}).empty());
}

TEST_CASE("free_reduce agrees with both cancellation orders") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    auto w = test::random_word(rng, 2, rng() % 21, false);
    auto r = free_reduce(w);
    CHECK(r == cancel_rightmost(w));
    CHECK(r == cancel_leftmost(w));
    CHECK(free_reduce(r) == r);
    CHECK(!has_adjacent_inverses(r));
    CHECK(r.size() <= w.size());
  }
}

TEST_CASE("is_positive") {
  auto a = abc();
  CHECK(is_positive(W(a, "a c")));
  CHECK_FALSE(is_positive(W(a, "a^-1 c")));
  CHECK(is_positive(Word{}));

  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    auto u = test::random_word(rng, 3, rng() % 5, rng() % 2 == 0);
    auto v = test::random_word(rng, 3, rng() % 5, rng() % 2 == 0);
    CHECK(is_positive(concat(u, v)) == (is_positive(u) && is_positive(v)));
  }
}

TEST_CASE("inverse of a word") {
  auto a = abc();
  CHECK(inverse(W(a, "a b^-1 c")) == W(a, "c^-1 b a^-1"));
  CHECK(free_reduce(concat(W(a, "a b^-1 c"), inverse(W(a, "a b^-1 c"))))
            .empty());
}

TEST_CASE("group_to_monoid") {
  auto         a = test::abc(2);
  Presentation g{a, {{W(a, "a b"), W(a, "b a")}}, PresentationKind::kGroup};
  auto         m = group_to_monoid(g);
  CHECK(m.kind == PresentationKind::kMonoid);
  CHECK(m.inverses_allowed);
  REQUIRE(m.relations.size() == 5);
  CHECK(m.relations[0] == g.relations[0]);
  CHECK(m.relations[1] == Relation{W(a, "a a^-1"), {}});
  CHECK(m.relations[2] == Relation{W(a, "a^-1 a"), {}});
  CHECK(m.relations[3] == Relation{W(a, "b b^-1"), {}});
  CHECK(m.relations[4] == Relation{W(a, "b^-1 b"), {}});

  Presentation free{Alphabet({"x"}), {}, PresentationKind::kGroup};
  CHECK(group_to_monoid(free).relations.size() == 2);

  auto         a3 = abc();
  Presentation b3{a3,
                  {{W(a3, "a a a"), W(a3, "c")}, {W(a3, "b b"), W(a3, "c")}},
                  PresentationKind::kGroup};
  auto m3 = group_to_monoid(b3);
  CHECK(m3.relations.size() == 2 + 6);
  CHECK(m3.relations[0] == b3.relations[0]);
  CHECK(m3.relations[1] == b3.relations[1]);

  CHECK_THROWS_AS(group_to_monoid(m3), Error);
}

TEST_CASE("parse_word and format_word") {
  auto a = abc();
  CHECK(W(a, "a b^-1 c")
        == Word{Letter(0, 1), Letter(1, -1), Letter(2, 1)});
  CHECK(W(a, "1").empty());
  CHECK(W(a, "  ").empty());
  CHECK(format_word({}, a) == "1");
  CHECK(format_word(W(a, "a b^-1"), a) == "a b^-1");

  auto code = [&](std::string_view s) {
    try {
      (void) parse_word(s, a);
    } catch (Error const& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  CHECK(code("z") == ErrorCode::kUnknownGenerator);
  CHECK(code("a^2") == ErrorCode::kMalformedExponent);
  CHECK(code("a^") == ErrorCode::kMalformedExponent);
  CHECK(code("a 1") == ErrorCode::kParse);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    auto w = test::random_word(rng, 3, rng() % 8, false);
    CHECK(parse_word(format_word(w, a), a) == w);
  }
}

TEST_CASE("presentation validation") {
  auto         a = test::abc(2);
  Presentation p{a, {{W(a, "a^-1"), W(a, "b")}}, PresentationKind::kMonoid};
  CHECK_THROWS_AS(p.validate(), Error);
  p.kind = PresentationKind::kGroup;
  CHECK_NOTHROW(p.validate());
}
