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

#include "rws/embedding.hpp"

#include <map>
#include <numeric>

#include "rws/error.hpp"

namespace rws {

  namespace {
    std::size_t find_root(std::vector<std::size_t>& parent, std::size_t v) {
      while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v         = parent[v];
      }
      return v;
    }

    std::optional<AdianResult> adian_if_applicable(Presentation const& p) {
      if (p.kind != PresentationKind::kMonoid || p.inverses_allowed) {
        // A group presentation's own relations still give the graphs of the
        // monoid it presents.
        Presentation m{p.alphabet, p.relations, PresentationKind::kMonoid};
        for (auto const& rel : m.relations) {
          if (!is_positive(rel.left) || !is_positive(rel.right)) {
            return std::nullopt;
          }
        }
        return adian_if_applicable(m);
      }
      for (auto const& rel : p.relations) {
        if (rel.left.empty() || rel.right.empty()) {
          return std::nullopt;
        }
      }
      return adian_criterion(adian_graphs(p));
    }

    void judge(EmbeddingVerdict& v) {
      v.c_plus = satisfies_c_plus(v.system);
      auto const& a = v.system.alphabet();
      if (v.c_plus.status == CPlus::kViolated) {
        v.status = Verdict::kInconclusive;
        v.reason = "c_plus_violated";
        v.detail = "positive lhs with non-positive rhs: "
                   + format_rule(v.system.rule(v.c_plus.violations.front()), a);
        return;
      }
      if (v.completion != CompletionStatus::kComplete) {
        v.status = Verdict::kInconclusive;
        v.reason = "budget_exhausted:" + std::string(to_string(*v.exhausted));
        v.detail = "completion stopped after step "
                   + std::to_string(v.steps_run);
        return;
      }
      if (v.provenance && !v.provenance->holds()) {
        v.status = Verdict::kInconclusive;
        v.reason = "provenance_failed";
        v.detail = v.provenance->detail;
        return;
      }
      if (v.c_plus.status == CPlus::kNotApplicable) {
        v.status = Verdict::kNotApplicable;
        v.reason = "no_positive_rules";
        v.detail = "no rule has a positive lhs";
        return;
      }
      v.status          = Verdict::kEmbeds;
      v.positive_system = positive_subsystem(v.system);
    }
  }  // namespace

  AdianGraphs adian_graphs(Presentation const& p) {
    if (p.kind != PresentationKind::kMonoid || p.inverses_allowed) {
      throw Error(ErrorCode::kNonPositivePresentation,
                  "left and right graphs need a positive monoid presentation");
    }
    AdianGraphs g;
    g.vertices = p.alphabet.size();
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
      auto const& rel = p.relations[i];
      if (rel.left.empty() || rel.right.empty()) {
        throw Error(ErrorCode::kEmptyRelationSide,
                    "relation " + std::to_string(i + 1) + " has an empty side");
      }
      if (!is_positive(rel.left) || !is_positive(rel.right)) {
        throw Error(ErrorCode::kNonPositivePresentation,
                    "relation " + std::to_string(i + 1)
                        + " uses an inverse letter");
      }
      g.left_edges.push_back(
          {rel.left.front().generator(), rel.right.front().generator(), i});
      g.right_edges.push_back(
          {rel.left.back().generator(), rel.right.back().generator(), i});
    }
    return g;
  }

  bool has_cycle(std::size_t vertices, std::vector<AdianEdge> const& edges) {
    std::vector<std::size_t> parent(vertices);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    for (auto const& e : edges) {
      auto ra = find_root(parent, e.a);
      auto rb = find_root(parent, e.b);
      // An edge inside an existing component closes a cycle: a forest on
      // k vertices has at most k - 1 edges.
      if (ra == rb) {
        return true;
      }
      parent[ra] = rb;
    }
    return false;
  }

  AdianResult adian_criterion(AdianGraphs const& g) {
    return {has_cycle(g.vertices, g.left_edges),
            has_cycle(g.vertices, g.right_edges)};
  }

  std::string_view to_string(CPlus c) noexcept {
    switch (c) {
      case CPlus::kHolds: return "holds";
      case CPlus::kViolated: return "violated";
      case CPlus::kNotApplicable: return "not_applicable";
    }
    return "unknown";
  }

  std::string_view to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::kEmbeds: return "embeds";
      case Verdict::kInconclusive: return "inconclusive";
      case Verdict::kNotApplicable: return "not_applicable";
    }
    return "unknown";
  }

  CPlusResult satisfies_c_plus(RewritingSystem const& rs) {
    CPlusResult result;
    bool        any_positive = false;
    for (auto const& r : rs.rules()) {
      if (!r.positive()) {
        continue;
      }
      any_positive = true;
      if (!is_positive(r.rhs())) {
        result.violations.push_back(r.id());
      }
    }
    if (!any_positive) {
      result.status = CPlus::kNotApplicable;
    } else if (result.violations.empty()) {
      result.status = CPlus::kHolds;
    } else {
      result.status = CPlus::kViolated;
    }
    return result;
  }

  RewritingSystem positive_subsystem(RewritingSystem const& rs) {
    return rs.filter([](Rule const& r) { return r.positive(); });
  }

  ProvenanceResult positive_provenance_ok(CompletionOutcome const& out) {
    if (!out.trace_recorded) {
      throw Error(ErrorCode::kMissingTrace,
                  "positive provenance needs a completion trace");
    }
    auto const& rs = out.system;
    for (auto const& r : rs.rules()) {
      if (r.step() == 0 || !r.positive()) {
        continue;
      }
      auto bad = [&](std::string what) {
        return ProvenanceResult{
            r.id(),
            "rule " + std::to_string(r.id()) + " ("
                + format_rule(r, rs.alphabet()) + "): " + std::move(what)};
      };
      if (!r.parents()) {
        return bad("no parents recorded");
      }
      for (auto p : {r.parents()->first, r.parents()->second}) {
        if (!rs.contains(p)) {
          return bad("parent " + std::to_string(p) + " is not in the system");
        }
        auto const& parent = rs.rule(p);
        if (!parent.positive()) {
          return bad("parent " + std::to_string(p) + " is not positive");
        }
        if (parent.step() >= r.step()) {
          return bad("parent " + std::to_string(p) + " was created at step "
                     + std::to_string(parent.step()));
        }
      }
    }
    return {};
  }

  EmbeddingVerdict embed_verdict(Presentation const&     p,
                                 LetterOrder const&      order,
                                 CompletionConfig const& config) {
    if (p.kind != PresentationKind::kGroup) {
      throw Error(ErrorCode::kInvalidArgument,
                  "embedding verdicts need a group presentation");
    }
    return embed_verdict(p, orient_presentation(p, order), order, config);
  }

  EmbeddingVerdict embed_verdict(Presentation const&     p,
                                 RewritingSystem const&  seed,
                                 LetterOrder const&      order,
                                 CompletionConfig const& config) {
    auto cfg         = config;
    cfg.record_trace = true;
    auto out         = knuth_bendix(seed, order, cfg);

    EmbeddingVerdict v;
    v.completion = out.status;
    v.exhausted  = out.exhausted;
    v.steps_run  = out.steps_run;
    v.provenance = positive_provenance_ok(out);
    v.system     = std::move(out.system);
    v.adian      = adian_if_applicable(p);
    judge(v);
    return v;
  }

  EmbeddingVerdict embed_verdict_precompleted(Presentation const&    p,
                                              RewritingSystem const& complete,
                                              std::size_t            fuel) {
    EmbeddingVerdict v;
    v.system = complete;
    v.adian  = adian_if_applicable(p);
    if (auto lc = is_locally_confluent(complete, fuel); !lc.confluent()) {
      v.c_plus = satisfies_c_plus(complete);
      v.status = Verdict::kInconclusive;
      v.reason = "not_confluent";
      v.detail = "critical pair "
                 + format_word(lc.witness->pair.left, complete.alphabet())
                 + " , "
                 + format_word(lc.witness->pair.right, complete.alphabet())
                 + " does not resolve";
      return v;
    }
    auto const mp = p.kind == PresentationKind::kGroup ? group_to_monoid(p) : p;
    for (auto const& rel : mp.relations) {
      if (normal_form(complete, rel.left, fuel)
          != normal_form(complete, rel.right, fuel)) {
        v.c_plus = satisfies_c_plus(complete);
        v.status = Verdict::kInconclusive;
        v.reason = "relation_not_joinable";
        v.detail = "relation " + format_word(rel.left, mp.alphabet) + " = "
                   + format_word(rel.right, mp.alphabet)
                   + " has two normal forms";
        return v;
      }
    }
    judge(v);
    return v;
  }

  bool monoid_equal(RewritingSystem const&  rs_plus,
                    std::span<Letter const> w1,
                    std::span<Letter const> w2,
                    std::size_t             fuel) {
    if (!is_positive(w1) || !is_positive(w2)) {
      throw Error(ErrorCode::kNonPositiveInput,
                  "monoid equality is defined on positive words");
    }
    return normal_form(rs_plus, w1, fuel) == normal_form(rs_plus, w2, fuel);
  }

  PartitionComparison compare_partitions(Presentation const&    n,
                                         RewritingSystem const& rs_plus,
                                         std::size_t            max_length,
                                         std::size_t            count_cap) {
    PartitionComparison result;
    std::size_t const   gens = n.alphabet.size();

    std::vector<Word> words{Word{}};
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (words[i].size() == max_length) {
        continue;
      }
      for (std::size_t g = 0; g < gens; ++g) {
        auto w = words[i];
        w.push_back(Letter(g, 1));
        words.push_back(std::move(w));
      }
    }
    std::map<Word, Word> nf;
    for (auto const& w : words) {
      nf.emplace(w, normal_form(rs_plus, w));
    }

    std::size_t longest = 0;
    for (auto const& rel : n.relations) {
      longest = std::max({longest, rel.left.size(), rel.right.size()});
    }
    for (auto const& w : words) {
      ++result.words_checked;
      auto cls = equivalence_class_bfs(n, w, max_length + longest, count_cap);
      if (!cls) {
        result.capped = true;
        continue;
      }
      auto const& target = nf.at(w);
      for (auto const& u : cls->words) {
        if (u.size() > max_length) {
          continue;
        }
        if (nf.at(u) != target) {
          result.mismatch.emplace(w, u);
          return result;
        }
      }
      for (auto const& [u, f] : nf) {
        if (f != target
            || std::binary_search(cls->words.begin(), cls->words.end(), u)) {
          continue;
        }
        if (cls->length_truncated) {
          result.capped = true;
        } else {
          result.mismatch.emplace(w, u);
          return result;
        }
      }
    }
    return result;
  }

}  // namespace rws
