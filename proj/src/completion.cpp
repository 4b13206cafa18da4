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

#include "rws/completion.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "rws/error.hpp"

namespace rws {

  std::string_view to_string(EventOutcome o) noexcept {
    switch (o) {
      case EventOutcome::kResolved: return "resolved";
      case EventOutcome::kNewRule: return "new_rule";
      case EventOutcome::kDuplicate: return "duplicate";
      case EventOutcome::kTruncated: return "truncated";
      case EventOutcome::kSubsumed: return "subsumed";
    }
    return "unknown";
  }

  std::string_view to_string(CompletionStatus s) noexcept {
    switch (s) {
      case CompletionStatus::kComplete: return "complete";
      case CompletionStatus::kBudgetExhausted: return "budget_exhausted";
    }
    return "unknown";
  }

  std::string_view to_string(Budget b) noexcept {
    switch (b) {
      case Budget::kMaxSteps: return "max_steps";
      case Budget::kMaxRules: return "max_rules";
      case Budget::kMaxRuleLength: return "max_rule_length";
    }
    return "unknown";
  }

  void CompletionConfig::validate() const {
    if (max_steps == 0 || max_rules == 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "max_steps and max_rules must be at least 1");
    }
  }

  namespace {
    struct Candidate {
      std::size_t            event;  // position in the step's event list
      OrientedPair           rule;
      std::pair<RuleId, RuleId> parents;
      Word                   left;   // critical pair before normalization
      Word                   right;
    };

    // Among the rules proposed by one step, drops those whose lhs contains
    // the lhs of a strictly shorter proposal and whose critical pair becomes
    // joinable once the shorter proposals are added.  Depends only on the set
    // of proposals, not on the order they were found in.
    std::vector<bool> redundant_candidates(RewritingSystem const&        base,
                                           LetterOrder const&            order,
                                           std::vector<Candidate> const& cands) {
      std::vector<bool>        redundant(cands.size(), false);
      std::vector<std::size_t> by_length(cands.size());
      for (std::size_t i = 0; i < cands.size(); ++i) {
        by_length[i] = i;
      }
      std::stable_sort(by_length.begin(),
                       by_length.end(),
                       [&](std::size_t a, std::size_t b) {
                         return cands[a].rule.lhs.size()
                                < cands[b].rule.lhs.size();
                       });
      std::vector<Rule> shorter(base.rules().begin(), base.rules().end());
      std::size_t       i = 0;
      while (i < by_length.size()) {
        auto const len = cands[by_length[i]].rule.lhs.size();
        auto       j   = i;
        while (j < by_length.size()
               && cands[by_length[j]].rule.lhs.size() == len) {
          ++j;
        }
        if (shorter.size() != base.size()) {
          RewritingSystem extended(base.alphabet(), shorter, order);
          for (auto k = i; k < j; ++k) {
            auto const& c         = cands[by_length[k]];
            bool        contained = false;
            for (std::size_t pos = 0; pos < c.rule.lhs.size() && !contained;
                 ++pos) {
              extended.index().for_each_match_at(
                  c.rule.lhs, pos, [&](std::size_t r) {
                    contained |= r >= base.size();
                  });
            }
            if (contained
                && normal_form(extended, c.left)
                       == normal_form(extended, c.right)) {
              redundant[by_length[k]] = true;
            }
          }
        }
        for (auto k = i; k < j; ++k) {
          if (!redundant[by_length[k]]) {
            auto const& c = cands[by_length[k]];
            shorter.emplace_back(shorter.size(), c.rule.lhs, c.rule.rhs);
          }
        }
        i = j;
      }
      return redundant;
    }
  }  // namespace

  CompletionOutcome knuth_bendix(RewritingSystem const&  seed,
                                 LetterOrder const&      order,
                                 CompletionConfig const& config) {
    config.validate();
    auto const& alphabet = seed.alphabet();

    std::vector<Rule> rules;
    rules.reserve(seed.size());
    for (auto const& r : seed.rules()) {
      rules.emplace_back(rules.size(), r.lhs(), r.rhs());
    }
    // Checks every seed rule is decreasing.
    RewritingSystem current(alphabet, rules, order);

    CompletionOutcome out;
    out.trace_recorded = config.record_trace;

    std::size_t first_new     = 0;
    bool        truncated_any = false;
    for (std::size_t n = 1;; ++n) {
      if (n > config.max_steps) {
        out.status    = CompletionStatus::kBudgetExhausted;
        out.exhausted = Budget::kMaxSteps;
        break;
      }
      out.steps_run = n;

      // Every event is kept here; Resolved ones are filtered out at the end
      // if the configuration asks for it.
      std::vector<CompletionEvent>               events;
      std::vector<Candidate>                     candidates;
      std::map<std::pair<Word, Word>, std::size_t> candidate_of;

      for (auto& a : find_ambiguities(current, first_new)) {
        auto cp       = critical_pair(current, a);
        auto l        = normal_form(current, cp.left);
        auto r        = normal_form(current, cp.right);
        auto oriented = orient(order, l, r);
        auto outcome  = EventOutcome::kResolved;
        if (oriented) {
          if (config.max_rule_length != 0
              && oriented->lhs.size() > config.max_rule_length) {
            truncated_any = true;
            outcome       = EventOutcome::kTruncated;
          } else {
            auto key = std::make_pair(oriented->lhs, oriented->rhs);
            if (candidate_of.contains(key)) {
              outcome = EventOutcome::kDuplicate;
            } else {
              outcome = EventOutcome::kNewRule;
              candidate_of.emplace(std::move(key), candidates.size());
              candidates.push_back({events.size(),
                                    std::move(*oriented),
                                    {first_rule(a), second_rule(a)},
                                    cp.left,
                                    cp.right});
            }
          }
        }
        events.push_back(
            {std::move(cp), std::move(l), std::move(r), outcome, {}});
      }

      auto const redundant = redundant_candidates(current, order, candidates);
      auto const before    = rules.size();
      bool       rules_budget_hit = false;
      std::vector<std::optional<RuleId>> id_of(candidates.size());
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        auto& c = candidates[i];
        if (redundant[i]) {
          events[c.event].outcome = EventOutcome::kSubsumed;
          continue;
        }
        if (rules.size() >= config.max_rules) {
          rules_budget_hit = true;
          events[c.event].outcome = EventOutcome::kTruncated;
          continue;
        }
        id_of[i] = rules.size();
        rules.emplace_back(rules.size(),
                           std::move(c.rule.lhs),
                           std::move(c.rule.rhs),
                           n,
                           c.parents);
        events[c.event].rule_id = id_of[i];
      }
      for (auto& e : events) {
        if (e.outcome != EventOutcome::kDuplicate) {
          continue;
        }
        auto oriented = orient(order, e.nf_left, e.nf_right);
        auto ci = candidate_of.at(std::make_pair(oriented->lhs, oriented->rhs));
        e.rule_id = id_of[ci];
        if (!id_of[ci]) {
          e.outcome = events[candidates[ci].event].outcome;
        }
      }

      if (config.record_trace) {
        CompletionStep step{n, {}};
        for (auto& e : events) {
          if (e.outcome != EventOutcome::kResolved || config.trace_resolved) {
            step.events.push_back(std::move(e));
          }
        }
        out.trace.push_back(std::move(step));
      }
      if (rules.size() != before) {
        current   = RewritingSystem(alphabet, rules, order);
        first_new = before;
      }
      if (rules_budget_hit) {
        out.status    = CompletionStatus::kBudgetExhausted;
        out.exhausted = Budget::kMaxRules;
        break;
      }
      if (rules.size() == before) {
        if (truncated_any) {
          out.status    = CompletionStatus::kBudgetExhausted;
          out.exhausted = Budget::kMaxRuleLength;
        } else {
          out.status = CompletionStatus::kComplete;
        }
        break;
      }
    }
    out.system = std::move(current);
    return out;
  }

  std::vector<Rule> rules_added_at_step(CompletionOutcome const& out,
                                        std::size_t              n) {
    std::vector<Rule> result;
    for (auto const& r : out.system.rules()) {
      if (r.step() == n) {
        result.push_back(r);
      }
    }
    return result;
  }

  CompletionEvent const* creating_event(CompletionOutcome const& out,
                                        RuleId                   id) {
    if (!out.system.contains(id)) {
      return nullptr;
    }
    auto step = out.system.rule(id).step();
    for (auto const& s : out.trace) {
      if (s.step_index != step) {
        continue;
      }
      for (auto const& e : s.events) {
        if (e.outcome == EventOutcome::kNewRule && e.rule_id == id) {
          return &e;
        }
      }
    }
    return nullptr;
  }

  RewritingSystem orient_presentation(Presentation const& p,
                                      LetterOrder const&  order) {
    Presentation const mp = p.kind == PresentationKind::kGroup
                                ? group_to_monoid(p)
                                : p;
    std::vector<OrientedPair>       pairs;
    std::set<std::pair<Word, Word>> seen;
    for (auto const& rel : mp.relations) {
      auto o = orient(order, rel.left, rel.right);
      if (o && seen.emplace(o->lhs, o->rhs).second) {
        pairs.push_back(std::move(*o));
      }
    }
    return RewritingSystem::from_pairs(mp.alphabet, std::move(pairs), order);
  }

}  // namespace rws
