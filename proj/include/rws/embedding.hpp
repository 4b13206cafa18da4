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

// Embedding of a monoid in its group.
//
// Two sufficient tests: cycle-freeness of the left and right graphs of a
// positive monoid presentation, and the positive-rule condition on a complete
// rewriting system for the group (every rule with positive lhs has positive
// rhs, and positive rules only come from positive rules).  Neither test ever
// concludes that a monoid does not embed.

#ifndef RWS_EMBEDDING_HPP_
#define RWS_EMBEDDING_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rws/completion.hpp"
#include "rws/core.hpp"
#include "rws/ordering.hpp"
#include "rws/rewriting.hpp"

namespace rws {

  struct AdianEdge {
    std::size_t a;  // generator indices; a == b is a self-loop
    std::size_t b;
    std::size_t relation;

    bool operator==(AdianEdge const&) const = default;
  };

  struct AdianGraphs {
    std::size_t            vertices = 0;
    std::vector<AdianEdge> left_edges;   // first letters
    std::vector<AdianEdge> right_edges;  // last letters
  };

  // Throws Error(kEmptyRelationSide) or Error(kNonPositivePresentation); group
  // presentations count as non-positive.
  AdianGraphs adian_graphs(Presentation const& p);

  struct AdianResult {
    bool left_has_cycle  = false;
    bool right_has_cycle = false;

    [[nodiscard]] bool embeds_by_adian() const noexcept {
      return !left_has_cycle && !right_has_cycle;
    }
  };

  // A multigraph has a cycle iff some component has at least as many edges
  // as vertices.  Self-loops and parallel edges count.
  bool        has_cycle(std::size_t vertices, std::vector<AdianEdge> const& e);
  AdianResult adian_criterion(AdianGraphs const& g);

  enum class CPlus { kHolds, kViolated, kNotApplicable };

  std::string_view to_string(CPlus c) noexcept;

  struct CPlusResult {
    CPlus               status = CPlus::kNotApplicable;
    std::vector<RuleId> violations;
  };

  // Not applicable when no rule has a positive lhs.  The empty rhs is
  // positive.
  CPlusResult satisfies_c_plus(RewritingSystem const& rs);

  // Rules with positive lhs, ids kept.
  RewritingSystem positive_subsystem(RewritingSystem const& rs);

  struct ProvenanceResult {
    std::optional<RuleId> counterexample;
    std::string           detail;

    [[nodiscard]] bool holds() const noexcept {
      return !counterexample.has_value();
    }
  };

  // Every created rule with positive lhs must have two positive parents, both
  // created at earlier steps.  Throws Error(kMissingTrace) if the outcome was
  // run without a trace.
  ProvenanceResult positive_provenance_ok(CompletionOutcome const& out);

  enum class Verdict { kEmbeds, kInconclusive, kNotApplicable };

  std::string_view to_string(Verdict v) noexcept;

  struct EmbeddingVerdict {
    Verdict status = Verdict::kInconclusive;
    // Machine-readable: "c_plus_violated", "budget_exhausted:<budget>",
    // "provenance_failed", "not_confluent", "relation_not_joinable",
    // "no_positive_rules", or empty for Embeds.
    std::string reason;
    std::string detail;

    // Completion state; steps_run is 0 for a supplied complete system.
    CompletionStatus      completion = CompletionStatus::kComplete;
    std::optional<Budget> exhausted;
    std::size_t           steps_run = 0;

    CPlusResult c_plus;
    // Empty when the system was supplied already complete (no trace).
    std::optional<ProvenanceResult> provenance;
    RewritingSystem                 system;
    std::optional<RewritingSystem>  positive_system;
    // Only when every relation is positive with both sides nonempty.
    std::optional<AdianResult> adian;
  };

  // Orients the group presentation by `order`, completes, and judges.
  EmbeddingVerdict embed_verdict(Presentation const&     p,
                                 LetterOrder const&      order,
                                 CompletionConfig const& config = {});

  // Same, starting from a given seed (e.g. the seed of a right-angled Artin
  // group) instead of the oriented presentation.  `p` is only used for the
  // left and right graphs.
  EmbeddingVerdict embed_verdict(Presentation const&     p,
                                 RewritingSystem const&  seed,
                                 LetterOrder const&      order,
                                 CompletionConfig const& config = {});

  // Judges a system claimed to be complete for p.  Termination is taken on
  // trust; local confluence and the joinability of every relation of p are
  // checked with `fuel` reduction steps per word.  Throws
  // Error(kFuelExhausted).
  EmbeddingVerdict embed_verdict_precompleted(Presentation const&    p,
                                              RewritingSystem const& complete,
                                              std::size_t fuel = 100000);

  // Equality of positive words modulo a complete positive system.  Throws
  // Error(kNonPositiveInput).
  bool monoid_equal(RewritingSystem const&  rs_plus,
                    std::span<Letter const> w1,
                    std::span<Letter const> w2,
                    std::size_t             fuel = kUnlimitedFuel);

  struct PartitionComparison {
    std::size_t words_checked = 0;
    // Two words that one side identifies and the other does not.
    std::optional<std::pair<Word, Word>> mismatch;
    // Some class search hit its caps; agreement is then only partial.
    bool capped = false;

    [[nodiscard]] bool agrees() const noexcept {
      return !mismatch.has_value();
    }
  };

  // Necessary condition only: compares, on all positive words of length at
  // most max_length, the classes of the monoid presentation n (found by
  // breadth-first search) with the normal forms modulo rs_plus.
  PartitionComparison compare_partitions(Presentation const&    n,
                                         RewritingSystem const& rs_plus,
                                         std::size_t            max_length,
                                         std::size_t            count_cap = 5000);

}  // namespace rws

#endif  // RWS_EMBEDDING_HPP_
