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

// String rewriting systems.
//
// Reduction is deterministic: the leftmost position holding any left-hand
// side wins, and among the rules matching there the lowest rule id wins.  A
// confluent system gives the same normal forms under every strategy, but the
// completion trace of a non-confluent intermediate system depends on it.

#ifndef RWS_REWRITING_HPP_
#define RWS_REWRITING_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "rws/core.hpp"
#include "rws/ordering.hpp"

namespace rws {

  using RuleId = std::size_t;

  class Rule {
   public:
    Rule(RuleId                                   id,
         Word                                     lhs,
         Word                                     rhs,
         std::size_t                              step    = 0,
         std::optional<std::pair<RuleId, RuleId>> parents = std::nullopt);

    [[nodiscard]] RuleId id() const noexcept {
      return _id;
    }
    [[nodiscard]] Word const& lhs() const noexcept {
      return _lhs;
    }
    [[nodiscard]] Word const& rhs() const noexcept {
      return _rhs;
    }
    // 0 for seed rules, n for rules created at the n-th completion step.
    [[nodiscard]] std::size_t step() const noexcept {
      return _step;
    }
    // (left, right) of the overlap, or (outer, inner) of the inclusion, that
    // created the rule.
    [[nodiscard]] std::optional<std::pair<RuleId, RuleId>> const&
    parents() const noexcept {
      return _parents;
    }
    // Cached is_positive(lhs()).
    [[nodiscard]] bool positive() const noexcept {
      return _positive;
    }

   private:
    RuleId                                   _id;
    Word                                     _lhs;
    Word                                     _rhs;
    std::size_t                              _step;
    std::optional<std::pair<RuleId, RuleId>> _parents;
    bool                                     _positive;
  };

  // Trie over the left-hand sides of a contiguous range of rules.  Rules are
  // referred to by their position in the span used to build the index.
  class LhsIndex {
   public:
    LhsIndex() = default;
    LhsIndex(std::span<Rule const> rules,
             std::size_t           letter_codes,
             std::size_t           first = 0);

    // Calls f(position) for every rule whose lhs occurs in w starting at pos,
    // shortest lhs first and by ascending position within a length.
    template <typename F>
    void for_each_match_at(std::span<Letter const> w,
                           std::size_t             pos,
                           F&&                     f) const {
      std::uint32_t node = 0;
      for (std::size_t i = pos; i < w.size() && !_nodes.empty(); ++i) {
        node = child(node, w[i]);
        if (node == 0) {
          return;
        }
        for (auto r : _nodes[node].terminal) {
          f(static_cast<std::size_t>(r));
        }
      }
    }

    // Calls f(position, matched_length) for every rule whose lhs occurs as a
    // prefix of `word` (terminal nodes along the walk), and returns the list
    // of rules whose lhs has all of `word` as a proper prefix.
    template <typename F>
    std::span<std::uint32_t const>
    walk(std::span<Letter const> word, F&& on_terminal) const {
      if (_nodes.empty()) {
        return {};
      }
      std::uint32_t node = 0;
      for (std::size_t i = 0; i < word.size(); ++i) {
        node = child(node, word[i]);
        if (node == 0) {
          return {};
        }
        for (auto r : _nodes[node].terminal) {
          on_terminal(static_cast<std::size_t>(r), i + 1);
        }
      }
      return _nodes[node].below;
    }

    [[nodiscard]] std::size_t max_lhs_length() const noexcept {
      return _max_length;
    }

   private:
    struct Node {
      std::vector<std::uint32_t> terminal;
      std::vector<std::uint32_t> below;
    };

    [[nodiscard]] std::uint32_t child(std::uint32_t node, Letter l) const {
      if (l.code() >= _codes) {
        return 0;
      }
      return _children[node * _codes + l.code()];
    }

    std::size_t                _codes = 0;
    std::size_t                _max_length = 0;
    std::vector<std::uint32_t> _children;
    std::vector<Node>          _nodes;
  };

  class RewritingSystem {
   public:
    RewritingSystem() = default;

    // Validates: nonempty lhs, lhs != rhs, unique ids, no repeated (lhs, rhs)
    // pair, letters within the alphabet and, when an order is given, every
    // rule decreasing under it.
    RewritingSystem(Alphabet                   alphabet,
                    std::vector<Rule>          rules,
                    std::optional<LetterOrder> order = std::nullopt);

    // Assigns ids 0, 1, 2, ... in list order.
    static RewritingSystem from_pairs(Alphabet                   alphabet,
                                      std::vector<OrientedPair>  pairs,
                                      std::optional<LetterOrder> order
                                      = std::nullopt);

    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    [[nodiscard]] std::span<Rule const> rules() const noexcept {
      return _rules;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _rules.size();
    }
    [[nodiscard]] std::optional<LetterOrder> const& order() const noexcept {
      return _order;
    }
    [[nodiscard]] bool order_backed() const noexcept {
      return _order.has_value();
    }
    [[nodiscard]] LhsIndex const& index() const noexcept {
      return *_index;
    }

    // Throws Error(kInvalidArgument) for an unknown id.
    [[nodiscard]] Rule const& rule(RuleId id) const;
    [[nodiscard]] bool        contains(RuleId id) const {
      return _position.contains(id);
    }
    [[nodiscard]] std::size_t position(RuleId id) const;

    // Keeps the rules satisfying `keep`, with their ids.
    template <typename Pred>
    [[nodiscard]] RewritingSystem filter(Pred&& keep) const {
      std::vector<Rule> kept;
      for (auto const& r : _rules) {
        if (keep(r)) {
          kept.push_back(r);
        }
      }
      return RewritingSystem(_alphabet, std::move(kept), _order);
    }

   private:
    Alphabet                                _alphabet;
    std::vector<Rule>                       _rules;
    std::optional<LetterOrder>              _order;
    std::unordered_map<RuleId, std::size_t> _position;
    std::shared_ptr<LhsIndex const>         _index
        = std::make_shared<LhsIndex const>();
  };

  inline constexpr std::size_t kUnlimitedFuel
      = std::numeric_limits<std::size_t>::max();

  // "lhs -> rhs".
  std::string format_rule(Rule const& r, Alphabet const& alphabet);

  struct Redex {
    std::size_t position;
    RuleId      rule;

    bool operator==(Redex const&) const = default;
  };

  // Leftmost position, lowest rule id; only positions >= from are examined.
  std::optional<Redex> leftmost_redex(RewritingSystem const&  rs,
                                      std::span<Letter const> w,
                                      std::size_t             from = 0);

  // std::nullopt means w is irreducible.
  std::optional<Word> reduce_once(RewritingSystem const&  rs,
                                  std::span<Letter const> w);

  // Fuel bounds the number of rule applications and is only enforced on
  // systems without an order; order-backed systems always terminate.
  // Throws Error(kFuelExhausted).
  Word normal_form(RewritingSystem const&  rs,
                   std::span<Letter const> w,
                   std::size_t             fuel = kUnlimitedFuel);

  struct Derivation {
    Word               result;
    std::vector<Redex> steps;
  };

  Derivation derive_normal_form(RewritingSystem const&  rs,
                                std::span<Letter const> w,
                                std::size_t             fuel = kUnlimitedFuel);

  // uv -> r1 (left) and vw -> r2 (right), with u, v, w nonempty.
  struct Overlap {
    RuleId left_rule;
    RuleId right_rule;
    Word   u;
    Word   v;
    Word   w;

    bool operator==(Overlap const&) const = default;
  };

  // v -> r1 (inner) and u v w -> r2 (outer); the rules differ when u and w
  // are both empty.
  struct Inclusion {
    RuleId inner_rule;
    RuleId outer_rule;
    Word   u;
    Word   w;

    bool operator==(Inclusion const&) const = default;
  };

  using Ambiguity = std::variant<Overlap, Inclusion>;

  // The rule whose lhs starts the superposition word (left or outer).
  RuleId      first_rule(Ambiguity const& a) noexcept;
  // The other rule (right or inner).
  RuleId      second_rule(Ambiguity const& a) noexcept;
  // Length of u.
  std::size_t split_position(Ambiguity const& a) noexcept;
  bool        is_overlap(Ambiguity const& a) noexcept;

  // Sorted by (first rule id, second rule id, split position), overlaps
  // before inclusions on ties.
  std::vector<Ambiguity> find_ambiguities(RewritingSystem const& rs);

  // Only ambiguities involving at least one rule at position >= first_new.
  std::vector<Ambiguity> find_ambiguities(RewritingSystem const& rs,
                                          std::size_t            first_new);

  struct CriticalPair {
    Word      left;
    Word      right;
    Ambiguity source;
  };

  // Overlap: (r1 w, u r2).  Inclusion: (u r1 w, r2) with r1 the inner rhs.
  CriticalPair critical_pair(RewritingSystem const& rs, Ambiguity const& a);

  // The superposition word: u v w for overlaps, u v w = outer lhs for
  // inclusions.
  Word superposition(RewritingSystem const& rs, Ambiguity const& a);

  struct ConfluenceWitness {
    CriticalPair pair;
    Word         nf_left;
    Word         nf_right;
  };

  struct LocalConfluence {
    std::optional<ConfluenceWitness> witness;

    [[nodiscard]] bool confluent() const noexcept {
      return !witness.has_value();
    }
  };

  LocalConfluence is_locally_confluent(RewritingSystem const& rs,
                                       std::size_t fuel = kUnlimitedFuel);

  // Drops every rule whose lhs contains the lhs of another rule.  For display
  // only: verdicts and traces always use the full system.
  RewritingSystem prune(RewritingSystem const& rs);

  struct EquivalenceClass {
    // Sorted.
    std::vector<Word> words;
    // True if some word reachable by one relation application was longer
    // than the length cap and discarded.
    bool length_truncated = false;
  };

  // Breadth-first closure of {w} under every relation applied in both
  // directions at every position.  std::nullopt means more than count_cap
  // words were found.
  std::optional<EquivalenceClass>
  equivalence_class_bfs(Presentation const&     p,
                        std::span<Letter const> w,
                        std::size_t             len_cap,
                        std::size_t             count_cap);

}  // namespace rws

#endif  // RWS_REWRITING_HPP_
