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
#include <set>

#include "doctest.h"
#include "rws/error.hpp"
#include "rws/raag.hpp"
#include "support.hpp"

using namespace rws;
using rws::test::abc;
using rws::test::W;

namespace {
  DefiningGraph p3() {
    return DefiningGraph(abc(), {{0, 1}, {1, 2}});
  }

  DefiningGraph cycle(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i) {
      edges.emplace_back(i, (i + 1) % n);
    }
    return DefiningGraph(abc(n), edges);
  }

  bool bipartite_by_enumeration(DefiningGraph const& g) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << g.size()); ++mask) {
      bool proper = true;
      for (auto [x, y] : g.edges()) {
        proper &= ((mask >> x) & 1U) != ((mask >> y) & 1U);
      }
      if (proper) {
        return true;
      }
    }
    return false;
  }

  std::set<std::pair<Word, Word>> pairs(RewritingSystem const& rs) {
    std::set<std::pair<Word, Word>> s;
    for (auto const& r : rs.rules()) {
      s.emplace(r.lhs(), r.rhs());
    }
    return s;
  }
}  // namespace

TEST_CASE("defining graphs") {
  CHECK_THROWS_AS(DefiningGraph(abc(2), {{0, 0}}), Error);
  CHECK_THROWS_AS(DefiningGraph(abc(2), {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(DefiningGraph(abc(2), {{0, 2}}), Error);
  auto g = DefiningGraph(abc(), {{2, 1}, {0, 1}});
  CHECK(g.edges() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(DefiningGraph::complete(abc(4)).edges().size() == 6);
}

TEST_CASE("raag_presentation") {
  auto a = abc();
  auto p = raag_presentation(p3());
  CHECK(p.kind == PresentationKind::kGroup);
  CHECK(p.relations
        == std::vector<Relation>{{W(a, "a b"), W(a, "b a")},
                                 {W(a, "b c"), W(a, "c b")}});
  CHECK(raag_presentation(DefiningGraph(abc(), {})).relations.empty());
  CHECK(raag_presentation(DefiningGraph::complete(abc())).relations.size() == 3);
}

TEST_CASE("raag_re0") {
  auto a  = test::abc(2);
  auto g  = DefiningGraph(a, {{0, 1}});
  auto rs = raag_re0(g, LetterOrder::interleaved(2));
  std::set<std::pair<Word, Word>> expected{
      {W(a, "a b"), W(a, "b a")},
      {W(a, "a b^-1"), W(a, "b^-1 a")},
      {W(a, "a^-1 b"), W(a, "b a^-1")},
      {W(a, "a^-1 b^-1"), W(a, "b^-1 a^-1")},
      {W(a, "a a^-1"), {}},
      {W(a, "a^-1 a"), {}},
      {W(a, "b b^-1"), {}},
      {W(a, "b^-1 b"), {}}};
  CHECK(pairs(rs) == expected);
  CHECK(rs.size() == 8);
  for (auto const& r : rs.rules()) {
    if (r.positive()) {
      CHECK(is_positive(r.rhs()));
    }
  }
  CHECK(raag_re0(DefiningGraph(abc(), {}), LetterOrder::interleaved(3)).size()
        == 6);

  // a above b above a^-1 points ab and a^-1 b opposite ways.
  auto split = LetterOrder(W(a, "a b a^-1 b^-1"));
  CHECK_THROWS_AS(raag_re0(g, split), Error);
}

TEST_CASE("two_coloring") {
  auto c = std::get<Coloring>(two_coloring(p3()));
  CHECK(c.colour == std::vector<Colour>{Colour::kWhite, Colour::kBlack,
                                        Colour::kWhite});
  auto c4 = std::get<Coloring>(two_coloring(cycle(4)));
  CHECK(c4.colour[0] != c4.colour[1]);
  CHECK(c4.colour[0] == c4.colour[2]);
  CHECK(c4.colour[1] == c4.colour[3]);

  auto k3 = std::get<NotBipartite>(two_coloring(DefiningGraph::complete(abc())));
  CHECK(k3.odd_cycle.size() == 3);

  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    auto g   = test::random_graph(rng, 1 + rng() % 7);
    auto res = two_coloring(g);
    CHECK(std::holds_alternative<Coloring>(res) == bipartite_by_enumeration(g));
    if (auto const* col = std::get_if<Coloring>(&res)) {
      for (auto [x, y] : g.edges()) {
        CHECK(col->colour[x] != col->colour[y]);
      }
    } else {
      auto const& cyc = std::get<NotBipartite>(res).odd_cycle;
      CHECK(cyc.size() % 2 == 1);
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        CHECK(g.adjacent(cyc[k], cyc[(k + 1) % cyc.size()]));
      }
    }
  }
}

TEST_CASE("coloring_order") {
  auto g = p3();
  auto a = abc();
  auto o = coloring_order(g, std::get<Coloring>(two_coloring(g)));
  CHECK(format_order(o, a) == "b > b^-1 > a > a^-1 > c > c^-1");
  auto re0 = raag_re0(g, o);
  for (auto const& r : re0.rules()) {
    if (!r.rhs().empty()) {
      CHECK(r.lhs().front().generator() == 1);
      CHECK(r.rhs().front().generator() != 1);
    }
  }
  auto out = knuth_bendix(re0, o);
  CHECK(out.complete());
  CHECK(out.system.size() == re0.size());

  auto custom = coloring_order(g,
                               std::get<Coloring>(two_coloring(g)),
                               W(a, "b^-1 b"),
                               W(a, "c^-1 a c a^-1"));
  CHECK(format_order(custom, a) == "b^-1 > b > c^-1 > a > c > a^-1");
}

TEST_CASE("complete graphs add no rules") {
  std::mt19937_64 rng(41);
  for (std::size_t n = 1; n <= 4; ++n) {
    auto g = DefiningGraph::complete(abc(n));
    for (int k = 0; k < 4; ++k) {
      auto o   = k == 0 ? LetterOrder::interleaved(n)
                        : test::random_paired_order(rng, n);
      auto re0 = raag_re0(g, o);
      auto out = knuth_bendix(re0, o);
      CHECK(out.complete());
      CHECK(out.system.size() == re0.size());
    }
  }
}

TEST_CASE("is_clique") {
  CHECK(is_clique(DefiningGraph::complete(abc()), {0, 1, 2}));
  CHECK_FALSE(is_clique(p3(), {0, 1, 2}));
  CHECK(is_clique(p3(), {0}));
  CHECK(is_clique(p3(), {}));
  CHECK(is_clique(p3(), {1, 2}));
}

TEST_CASE("commutation_shape and prefix_condition_holds") {
  auto a   = abc();
  auto o   = LetterOrder::interleaved(3);
  auto re0 = raag_re0(p3(), o);
  auto s   = commutation_shape(W(a, "a c b"), W(a, "b a c"));
  REQUIRE(s);
  CHECK(s->first == W(a, "a c"));
  CHECK(s->second == Letter(1, 1));
  CHECK_FALSE(commutation_shape(W(a, "a c b"), W(a, "b c a")));
  CHECK_FALSE(commutation_shape(W(a, "a a"), {}));

  CHECK(prefix_condition_holds(Rule(50, W(a, "a c b"), W(a, "b a c")), re0));
  CHECK(prefix_condition_holds(Rule(51, W(a, "a b"), W(a, "b a")), re0));
  CHECK_FALSE(prefix_condition_holds(Rule(52, W(a, "a b"), W(a, "b a")),
                                     RewritingSystem(a, {})));
  CHECK_FALSE(prefix_condition_holds(Rule(53, W(a, "c a b"), W(a, "b c a")), re0));
}

TEST_CASE("verify_structure") {
  auto o   = LetterOrder::interleaved(3);
  auto re0 = raag_re0(p3(), o);
  auto out = knuth_bendix(re0, o, raag_completion_config(5, true));
  CHECK(verify_structure(out, re0).all_passed());
  CHECK(check_prefix_genesis(out).empty());

  auto g  = p3();
  auto co = coloring_order(g, std::get<Coloring>(two_coloring(g)));
  auto r2 = raag_re0(g, co);
  CHECK(verify_structure(knuth_bendix(r2, co), r2).all_passed());

  auto quiet = knuth_bendix(re0, o, raag_completion_config(2));
  CHECK_THROWS_AS(verify_structure(quiet, re0), Error);

  std::mt19937_64 rng(5);
  auto            c5 = cycle(5);
  for (int k = 0; k < 3; ++k) {
    auto oc  = k == 0 ? LetterOrder::interleaved(5)
                      : test::random_paired_order(rng, 5);
    auto r5  = raag_re0(c5, oc);
    auto o5  = knuth_bendix(r5, oc, raag_completion_config(4, true));
    auto rep = verify_structure(o5, r5);
    CHECK_MESSAGE(rep.all_passed(), rep.shape_and_prefix.detail,
                  rep.right_parent_seed.detail, rep.length_n_plus_2.detail);
    CHECK(check_prefix_genesis(o5).empty());
  }
}

TEST_CASE("structure checks catch a wrong rule") {
  auto a   = abc();
  auto o   = LetterOrder::interleaved(3);
  auto re0 = raag_re0(p3(), o);
  auto out = knuth_bendix(re0, o, raag_completion_config(1, true));
  std::vector<Rule> rules(out.system.rules().begin(), out.system.rules().end());
  rules.emplace_back(rules.size(), W(a, "a c c b"), W(a, "b c a c"), 1,
                     std::pair<RuleId, RuleId>{0, 1});
  out.system = RewritingSystem(a, rules, o);
  auto rep   = verify_structure(out, re0);
  CHECK_FALSE(rep.shape_and_prefix.passed);
  CHECK(rep.shape_and_prefix.witness == RuleId{rules.size() - 1});
  CHECK_FALSE(rep.length_n_plus_2.passed);
  CHECK_FALSE(check_prefix_genesis(out).empty());
}

TEST_CASE("raag_normal_form") {
  auto a = abc();
  auto o = LetterOrder::interleaved(3);
  CHECK(raag_normal_form(p3(), o, W(a, "a b c")) == W(a, "b a c"));
  CHECK(raag_normal_form(p3(), o, W(a, "a a^-1")).empty());
  auto co = coloring_order(p3(), std::get<Coloring>(two_coloring(p3())));
  CHECK(raag_normal_form(p3(), co, W(a, "b a")) == W(a, "a b"));
}

TEST_CASE("raag normal forms against the oracle") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    auto g   = test::random_graph(rng, 2 + rng() % 4);
    auto n   = g.size();
    auto o   = test::random_paired_order(rng, n);
    // Signed commutations and free reductions: reduced words of one
    // element are connected without growing.
    auto grp = test::as_presentation(raag_re0(g, o));
    RaagSolver solver(g, o);
    for (int i = 0; i < 25; ++i) {
      auto len = rng() % 7;
      auto w   = test::random_word(rng, n, len, rng() % 2 == 0);
      auto nf  = solver.normal_form(w);
      if (is_positive(w)) {
        CHECK(is_positive(nf));
      }
      // Budget stability.
      for (std::size_t extra : {1, 2}) {
        auto out = knuth_bendix(raag_re0(g, o), o,
                                raag_completion_config(
                                    std::max<std::size_t>(len, 3) - 2 + extra));
        CHECK(normal_form(out.system, free_reduce(w)) == nf);
      }
      // Same class as the input and shortlex-least within its length.
      auto fw  = free_reduce(w);
      auto cls = equivalence_class_bfs(grp, fw, fw.size(), 100000);
      REQUIRE(cls);
      CHECK(std::binary_search(cls->words.begin(), cls->words.end(), nf));
      for (auto const& u : cls->words) {
        if (u.size() == nf.size()) {
          CHECK(compare_shortlex(o, nf, u) <= 0);
        }
      }
    }
  }
}

TEST_CASE("solver reuses deeper completions") {
  auto       o = LetterOrder::interleaved(3);
  RaagSolver s(p3(), o);
  auto const& deep = s.completed_through_length(7);
  CHECK(deep.steps_run == 5);
  auto const& shallow = s.completed_through_length(4);
  CHECK(&deep == &shallow);
}
