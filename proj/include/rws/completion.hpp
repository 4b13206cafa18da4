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

// Stepwise Knuth-Bendix completion.
//
// The system after step n is R_n = R_{n-1} + (rules created at step n).
// Step n looks at every ambiguity of R_{n-1} that involves at least one rule
// created at step n - 1 (step 1 looks at all ambiguities of the seed), reduces
// both words of each critical pair to normal form modulo R_{n-1}, and orients
// every unequal pair into a proposed rule.  A proposal whose lhs contains the
// lhs of a shorter proposal from the same step, and whose pair is joinable
// with the shorter proposals added, is recorded as subsumed instead of being
// added.  Rules are never deleted, so every
// R_n is a subset of R_{n+1} and the step number of each rule is meaningful.

#ifndef RWS_COMPLETION_HPP_
#define RWS_COMPLETION_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "rws/ordering.hpp"
#include "rws/rewriting.hpp"

namespace rws {

  struct CompletionConfig {
    std::size_t max_steps = 10;
    std::size_t max_rules = 10000;
    // 0 means unlimited.
    std::size_t max_rule_length = 32;
    bool        record_trace    = true;
    // Whether Resolved events are kept in the trace; created, duplicate and
    // truncated pairs are always kept when tracing.
    bool trace_resolved = true;

    // Throws Error(kInvalidArgument) unless max_steps and max_rules are >= 1.
    void validate() const;
  };

  enum class EventOutcome {
    kResolved,
    kNewRule,
    // Same (lhs, rhs) as a rule already created earlier in this step.
    kDuplicate,
    // Dropped by the max_rule_length or max_rules budget.
    kTruncated,
    // Joinable once a shorter rule created in the same step is added; the
    // lhs contains that rule's lhs.
    kSubsumed,
  };

  std::string_view to_string(EventOutcome o) noexcept;

  struct CompletionEvent {
    CriticalPair          cp_before;
    Word                  nf_left;
    Word                  nf_right;
    EventOutcome          outcome;
    std::optional<RuleId> rule_id;

    [[nodiscard]] Ambiguity const& ambiguity() const noexcept {
      return cp_before.source;
    }
  };

  struct CompletionStep {
    std::size_t                  step_index;
    std::vector<CompletionEvent> events;
  };

  enum class CompletionStatus { kComplete, kBudgetExhausted };
  enum class Budget { kMaxSteps, kMaxRules, kMaxRuleLength };

  std::string_view to_string(CompletionStatus s) noexcept;
  std::string_view to_string(Budget b) noexcept;

  struct CompletionOutcome {
    CompletionStatus            status = CompletionStatus::kComplete;
    std::optional<Budget>       exhausted;
    RewritingSystem             system;
    std::vector<CompletionStep> trace;
    bool                        trace_recorded = false;
    // Index of the last step that was run (0 if none).
    std::size_t steps_run = 0;

    [[nodiscard]] bool complete() const noexcept {
      return status == CompletionStatus::kComplete;
    }
  };

  // The seed must be decreasing under `order`; its rules are renumbered
  // 0, 1, ... in list order and given step 0.  Budget exhaustion is reported
  // in the outcome, not thrown.
  CompletionOutcome knuth_bendix(RewritingSystem const&  seed,
                                 LetterOrder const&      order,
                                 CompletionConfig const& config = {});

  // Rules with step() == n, in creation order.
  std::vector<Rule> rules_added_at_step(CompletionOutcome const& out,
                                        std::size_t              n);

  // The event whose outcome created the rule, if traced.
  CompletionEvent const* creating_event(CompletionOutcome const& out,
                                        RuleId                   id);

  // Orients every relation of a monoid presentation (group presentations are
  // converted first) by `order`; trivial relations are skipped and repeated
  // rules kept once.
  RewritingSystem orient_presentation(Presentation const& p,
                                      LetterOrder const&  order);

}  // namespace rws

#endif  // RWS_COMPLETION_HPP_
