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

// Right-angled Artin groups.
//
// The seed system R0 of a defining graph holds, for every edge x - y, the four
// signed commutation rules x^g y^e -> y^e x^g oriented by a letter order, and
// the free reductions x x^-1 -> 1, x^-1 x -> 1 for every vertex.  Completing
// R0 produces rules of the form u x -> x u only; the structural checks below
// confirm that shape, and the related length and prefix properties, on a
// recorded completion trace.

#ifndef RWS_RAAG_HPP_
#define RWS_RAAG_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rws/completion.hpp"
#include "rws/core.hpp"
#include "rws/ordering.hpp"
#include "rws/rewriting.hpp"

namespace rws {

  class DefiningGraph {
   public:
    DefiningGraph() = default;

    // Edges are unordered pairs of distinct vertex indices; self-loops and
    // repeated edges are rejected with Error(kInvalidGraph).
    DefiningGraph(Alphabet                                         vertices,
                  std::vector<std::pair<std::size_t, std::size_t>> edges);

    static DefiningGraph complete(Alphabet vertices);

    [[nodiscard]] Alphabet const& vertices() const noexcept {
      return _vertices;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _vertices.size();
    }
    // Sorted, each as (smaller index, larger index).
    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> const&
    edges() const noexcept {
      return _edges;
    }
    [[nodiscard]] bool adjacent(std::size_t a, std::size_t b) const;
    [[nodiscard]] std::vector<std::size_t> const&
    neighbours(std::size_t v) const {
      return _adjacency[v];
    }

   private:
    Alphabet                                         _vertices;
    std::vector<std::pair<std::size_t, std::size_t>> _edges;
    std::vector<std::vector<std::size_t>>            _adjacency;
  };

  // One relation xy = yx per edge.
  Presentation raag_presentation(DefiningGraph const& g);

  // Commutation rules (edge by edge, sign pairs (+,+), (+,-), (-,+), (-,-))
  // followed by the free reductions (vertex by vertex).  Throws
  // Error(kInvalidOrder) if the order does not orient the four rules of some
  // edge the same way, which happens when x and x^-1 fall on different sides
  // of y or y^-1.
  RewritingSystem raag_re0(DefiningGraph const& g, LetterOrder const& order);

  enum class Colour { kBlack, kWhite };

  struct Coloring {
    std::vector<Colour> colour;

    bool operator==(Coloring const&) const = default;
  };

  struct NotBipartite {
    // A closed path of odd length: v0 v1 ... v_{k-1} (v0 again closes it).
    std::vector<std::size_t> odd_cycle;
  };

  // Breadth-first 2-colouring.  Each component is rooted at its vertex of
  // largest degree (earliest declared on ties) and the root is Black.
  std::variant<Coloring, NotBipartite> two_coloring(DefiningGraph const& g);

  // Every Black signed letter above every White one.  Within a class the
  // given letters are used in order (greatest first); an empty list means
  // declaration order with each generator just above its inverse.
  LetterOrder coloring_order(DefiningGraph const&       g,
                             Coloring const&            c,
                             std::vector<Letter> const& black_order = {},
                             std::vector<Letter> const& white_order = {});

  bool is_clique(DefiningGraph const& g, std::set<std::size_t> const& s);

  // If r has shape u x -> x u for a single letter x, returns (u, x).
  std::optional<std::pair<Word, Letter>>
  commutation_shape(Word const& lhs, Word const& rhs);

  // r = u x -> x u with u = t1 t2 .. tk, t1 x -> x t1 in R0 and
  // x ti -> ti x in R0 for every i >= 2.
  bool prefix_condition_holds(Rule const& r, RewritingSystem const& re0);

  struct ConditionCheck {
    bool                  passed = true;
    std::optional<RuleId> witness;
    std::string           detail;
  };

  struct StructureReport {
    // Every created rule has shape u x -> x u and the prefix condition.
    ConditionCheck shape_and_prefix;
    // The right parent of every created rule is a seed rule.
    ConditionCheck right_parent_seed;
    // Rules created at step n have both sides of length n + 2.
    ConditionCheck length_n_plus_2;
    // Every rule-creating overlap has an overlapping word of length 1.
    ConditionCheck overlap_length_one;
    // lhs positive iff rhs positive, for every commutation rule.
    ConditionCheck positivity_symmetric;

    [[nodiscard]] bool all_passed() const noexcept {
      return shape_and_prefix.passed && right_parent_seed.passed
             && length_n_plus_2.passed && overlap_length_one.passed
             && positivity_symmetric.passed;
    }
  };

  // Throws Error(kMissingTrace) if the outcome has no trace.
  StructureReport verify_structure(CompletionOutcome const& out,
                                   RewritingSystem const&   re0);

  struct PrefixGenesisViolation {
    RuleId      rule;
    std::string detail;
  };

  // For every created rule u x -> x u at step n: u' x -> x u' exists at a
  // step < n for every nonempty proper prefix u' of u, and u x^-1 -> x^-1 u
  // exists.
  std::vector<PrefixGenesisViolation>
  check_prefix_genesis(CompletionOutcome const& out);

  // Completes R0 of (graph, order) lazily, one budget at a time, and caches
  // the deepest completion so far.  Not thread-safe; use one per thread.
  class RaagSolver {
   public:
    RaagSolver(DefiningGraph g, LetterOrder order);

    [[nodiscard]] DefiningGraph const& graph() const noexcept {
      return _graph;
    }
    [[nodiscard]] LetterOrder const& order() const noexcept {
      return _order;
    }

    // A system containing every rule of the complete system with lhs length
    // at most `length`.
    CompletionOutcome const& completed_through_length(std::size_t length);

    Word normal_form(std::span<Letter const> w);

   private:
    DefiningGraph                    _graph;
    LetterOrder                      _order;
    RewritingSystem                  _re0;
    std::optional<CompletionOutcome> _cache;
    std::size_t                      _cached_steps = 0;
  };

  // Completes R0 through step max(len - 2, 0) for the freely reduced input and
  // reduces modulo that system.
  Word raag_normal_form(DefiningGraph const&    g,
                        LetterOrder const&      order,
                        std::span<Letter const> w);

  // Budget used by the RAAG solver: steps are the only limit.
  CompletionConfig raag_completion_config(std::size_t steps,
                                          bool        record_trace = false);

}  // namespace rws

#endif  // RWS_RAAG_HPP_
