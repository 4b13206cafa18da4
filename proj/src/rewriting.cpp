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

#include "rws/rewriting.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>
#include <unordered_set>

#include "rws/error.hpp"

namespace rws {

  ////////////////////////////////////////////////////////////////////////
  // Rule
  ////////////////////////////////////////////////////////////////////////

  Rule::Rule(RuleId                                   id,
             Word                                     lhs,
             Word                                     rhs,
             std::size_t                              step,
             std::optional<std::pair<RuleId, RuleId>> parents)
      : _id(id),
        _lhs(std::move(lhs)),
        _rhs(std::move(rhs)),
        _step(step),
        _parents(parents),
        _positive(is_positive(_lhs)) {}

  ////////////////////////////////////////////////////////////////////////
  // LhsIndex
  ////////////////////////////////////////////////////////////////////////

  LhsIndex::LhsIndex(std::span<Rule const> rules,
                     std::size_t           letter_codes,
                     std::size_t           first)
      : _codes(letter_codes) {
    _nodes.emplace_back();
    _children.assign(_codes, 0);
    for (std::size_t r = first; r < rules.size(); ++r) {
      auto const&   lhs  = rules[r].lhs();
      std::uint32_t node = 0;
      _max_length        = std::max(_max_length, lhs.size());
      for (std::size_t i = 0; i < lhs.size(); ++i) {
        _nodes[node].below.push_back(static_cast<std::uint32_t>(r));
        auto code = lhs[i].code();
        auto next = _children[node * _codes + code];
        if (next == 0) {
          next = static_cast<std::uint32_t>(_nodes.size());
          _children[node * _codes + code] = next;
          _nodes.emplace_back();
          _children.resize(_children.size() + _codes, 0);
        }
        node = next;
      }
      _nodes[node].terminal.push_back(static_cast<std::uint32_t>(r));
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // RewritingSystem
  ////////////////////////////////////////////////////////////////////////

  RewritingSystem::RewritingSystem(Alphabet                   alphabet,
                                   std::vector<Rule>          rules,
                                   std::optional<LetterOrder> order)
      : _alphabet(std::move(alphabet)),
        _rules(std::move(rules)),
        _order(std::move(order)) {
    if (_order && _order->generators() != _alphabet.size()) {
      throw Error(ErrorCode::kInvalidOrder,
                  "order ranks " + std::to_string(_order->generators())
                      + " generators, alphabet has "
                      + std::to_string(_alphabet.size()));
    }
    std::set<std::pair<Word, Word>> seen;
    for (std::size_t i = 0; i < _rules.size(); ++i) {
      auto const& r = _rules[i];
      if (r.lhs().empty()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "rule " + std::to_string(r.id()) + " has an empty lhs");
      }
      if (r.lhs() == r.rhs()) {
        throw Error(ErrorCode::kTrivialRule,
                    "rule " + std::to_string(r.id()) + " has lhs == rhs");
      }
      for (auto const* side : {&r.lhs(), &r.rhs()}) {
        for (auto l : *side) {
          if (l.generator() >= _alphabet.size()) {
            throw Error(ErrorCode::kUnknownGenerator,
                        "rule " + std::to_string(r.id())
                            + " uses a generator outside the alphabet");
          }
        }
      }
      if (!_position.emplace(r.id(), i).second) {
        throw Error(ErrorCode::kDuplicateRule,
                    "rule id " + std::to_string(r.id()) + " used twice");
      }
      if (!seen.emplace(r.lhs(), r.rhs()).second) {
        throw Error(ErrorCode::kDuplicateRule,
                    "rule " + format_word(r.lhs(), _alphabet) + " -> "
                        + format_word(r.rhs(), _alphabet) + " given twice");
      }
      if (_order && compare_shortlex(*_order, r.lhs(), r.rhs()) <= 0) {
        throw Error(ErrorCode::kNonDecreasingRule,
                    "rule " + format_word(r.lhs(), _alphabet) + " -> "
                        + format_word(r.rhs(), _alphabet)
                        + " is not decreasing under the order");
      }
    }
    _index = std::make_shared<LhsIndex const>(_rules, _alphabet.letter_codes());
  }

  RewritingSystem RewritingSystem::from_pairs(Alphabet                   alphabet,
                                              std::vector<OrientedPair>  pairs,
                                              std::optional<LetterOrder> order) {
    std::vector<Rule> rules;
    rules.reserve(pairs.size());
    for (auto& p : pairs) {
      rules.emplace_back(rules.size(), std::move(p.lhs), std::move(p.rhs));
    }
    return RewritingSystem(
        std::move(alphabet), std::move(rules), std::move(order));
  }

  Rule const& RewritingSystem::rule(RuleId id) const {
    return _rules[position(id)];
  }

  std::size_t RewritingSystem::position(RuleId id) const {
    auto it = _position.find(id);
    if (it == _position.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "no rule with id " + std::to_string(id));
    }
    return it->second;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reduction
  ////////////////////////////////////////////////////////////////////////

  std::string format_rule(Rule const& r, Alphabet const& alphabet) {
    return format_word(r.lhs(), alphabet) + " -> "
           + format_word(r.rhs(), alphabet);
  }

  std::optional<Redex> leftmost_redex(RewritingSystem const&  rs,
                                      std::span<Letter const> w,
                                      std::size_t             from) {
    auto rules = rs.rules();
    for (std::size_t pos = from; pos < w.size(); ++pos) {
      std::optional<RuleId> best;
      rs.index().for_each_match_at(w, pos, [&](std::size_t r) {
        auto id = rules[r].id();
        if (!best || id < *best) {
          best = id;
        }
      });
      if (best) {
        return Redex{pos, *best};
      }
    }
    return std::nullopt;
  }

  std::optional<Word> reduce_once(RewritingSystem const&  rs,
                                  std::span<Letter const> w) {
    auto redex = leftmost_redex(rs, w);
    if (!redex) {
      return std::nullopt;
    }
    auto const& r = rs.rule(redex->rule);
    Word        out(w.begin(), w.begin() + redex->position);
    out.insert(out.end(), r.rhs().begin(), r.rhs().end());
    out.insert(
        out.end(), w.begin() + redex->position + r.lhs().size(), w.end());
    return out;
  }

  namespace {
    template <typename OnStep>
    Word rewrite_to_normal_form(RewritingSystem const&  rs,
                                std::span<Letter const> w,
                                std::size_t             fuel,
                                OnStep&&                on_step) {
      Word        current(w.begin(), w.end());
      std::size_t from   = 0;
      std::size_t used   = 0;
      auto const  maxlen = rs.index().max_lhs_length();
      bool const  fueled = !rs.order_backed();
      while (auto redex = leftmost_redex(rs, current, from)) {
        if (fueled && used == fuel) {
          throw Error(ErrorCode::kFuelExhausted,
                      "normal form not reached within "
                          + std::to_string(fuel) + " rewrites");
        }
        ++used;
        on_step(*redex);
        auto const& r     = rs.rule(redex->rule);
        auto        first = current.begin() + redex->position;
        current.erase(first, first + r.lhs().size());
        current.insert(current.begin() + redex->position,
                       r.rhs().begin(),
                       r.rhs().end());
        // No redex started left of the rewritten position before this step,
        // so any new one must reach into the replaced segment.
        from = redex->position + 1 >= maxlen ? redex->position + 1 - maxlen
                                             : 0;
      }
      return current;
    }
  }  // namespace

  Word normal_form(RewritingSystem const&  rs,
                   std::span<Letter const> w,
                   std::size_t             fuel) {
    return rewrite_to_normal_form(rs, w, fuel, [](Redex const&) {});
  }

  Derivation derive_normal_form(RewritingSystem const&  rs,
                                std::span<Letter const> w,
                                std::size_t             fuel) {
    Derivation d;
    d.result = rewrite_to_normal_form(
        rs, w, fuel, [&d](Redex const& r) { d.steps.push_back(r); });
    return d;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ambiguities and critical pairs
  ////////////////////////////////////////////////////////////////////////

  RuleId first_rule(Ambiguity const& a) noexcept {
    if (auto const* o = std::get_if<Overlap>(&a)) {
      return o->left_rule;
    }
    return std::get<Inclusion>(a).outer_rule;
  }

  RuleId second_rule(Ambiguity const& a) noexcept {
    if (auto const* o = std::get_if<Overlap>(&a)) {
      return o->right_rule;
    }
    return std::get<Inclusion>(a).inner_rule;
  }

  std::size_t split_position(Ambiguity const& a) noexcept {
    return std::visit([](auto const& x) { return x.u.size(); }, a);
  }

  bool is_overlap(Ambiguity const& a) noexcept {
    return std::holds_alternative<Overlap>(a);
  }

  namespace {
    auto sort_key(Ambiguity const& a) {
      return std::make_tuple(
          first_rule(a), second_rule(a), split_position(a), a.index());
    }

    std::vector<Ambiguity> enumerate_ambiguities(RewritingSystem const& rs,
                                                 std::size_t first_new) {
      auto                   rules = rs.rules();
      std::vector<Ambiguity> out;
      if (first_new >= rules.size()) {
        return out;
      }
      LhsIndex fresh;
      if (first_new > 0) {
        fresh = LhsIndex(rules, rs.alphabet().letter_codes(), first_new);
      }
      for (std::size_t i = 0; i < rules.size(); ++i) {
        LhsIndex const& idx = i < first_new ? fresh : rs.index();
        auto const&     lhs = rules[i].lhs();
        auto const      m   = lhs.size();
        for (std::size_t p = 0; p < m; ++p) {
          std::span<Letter const> suffix(lhs.begin() + p, lhs.end());
          auto below = idx.walk(suffix, [&](std::size_t j, std::size_t k) {
            if (p == 0 && k == m && j == i) {
              return;
            }
            out.emplace_back(Inclusion{rules[j].id(),
                                       rules[i].id(),
                                       Word(lhs.begin(), lhs.begin() + p),
                                       Word(lhs.begin() + p + k, lhs.end())});
          });
          if (p == 0) {
            continue;
          }
          for (auto j : below) {
            auto const& other = rules[j].lhs();
            out.emplace_back(
                Overlap{rules[i].id(),
                        rules[j].id(),
                        Word(lhs.begin(), lhs.begin() + p),
                        Word(suffix.begin(), suffix.end()),
                        Word(other.begin() + (m - p), other.end())});
          }
        }
      }
      std::sort(out.begin(),
                out.end(),
                [](Ambiguity const& a, Ambiguity const& b) {
                  return sort_key(a) < sort_key(b);
                });
      return out;
    }
  }  // namespace

  std::vector<Ambiguity> find_ambiguities(RewritingSystem const& rs) {
    return enumerate_ambiguities(rs, 0);
  }

  std::vector<Ambiguity> find_ambiguities(RewritingSystem const& rs,
                                          std::size_t            first_new) {
    return enumerate_ambiguities(rs, first_new);
  }

  CriticalPair critical_pair(RewritingSystem const& rs, Ambiguity const& a) {
    if (auto const* o = std::get_if<Overlap>(&a)) {
      return {concat(rs.rule(o->left_rule).rhs(), o->w),
              concat(o->u, rs.rule(o->right_rule).rhs()),
              a};
    }
    auto const& inc = std::get<Inclusion>(a);
    return {concat(inc.u, rs.rule(inc.inner_rule).rhs(), inc.w),
            rs.rule(inc.outer_rule).rhs(),
            a};
  }

  Word superposition(RewritingSystem const& rs, Ambiguity const& a) {
    if (auto const* o = std::get_if<Overlap>(&a)) {
      return concat(o->u, o->v, o->w);
    }
    return rs.rule(std::get<Inclusion>(a).outer_rule).lhs();
  }

  LocalConfluence is_locally_confluent(RewritingSystem const& rs,
                                       std::size_t            fuel) {
    for (auto const& a : find_ambiguities(rs)) {
      auto cp = critical_pair(rs, a);
      auto l  = normal_form(rs, cp.left, fuel);
      auto r  = normal_form(rs, cp.right, fuel);
      if (l != r) {
        return {ConfluenceWitness{std::move(cp), std::move(l), std::move(r)}};
      }
    }
    return {};
  }

  RewritingSystem prune(RewritingSystem const& rs) {
    auto rules = rs.rules();
    return rs.filter([&](Rule const& r) {
      auto const& lhs = r.lhs();
      for (std::size_t pos = 0; pos < lhs.size(); ++pos) {
        bool redundant = false;
        rs.index().for_each_match_at(lhs, pos, [&](std::size_t j) {
          auto const& other = rules[j];
          if (other.id() == r.id()) {
            return;
          }
          if (other.lhs().size() < lhs.size() || other.id() < r.id()) {
            redundant = true;
          }
        });
        if (redundant) {
          return false;
        }
      }
      return true;
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Breadth-first equivalence oracle
  ////////////////////////////////////////////////////////////////////////

  std::optional<EquivalenceClass>
  equivalence_class_bfs(Presentation const&     p,
                        std::span<Letter const> w,
                        std::size_t             len_cap,
                        std::size_t             count_cap) {
    std::unordered_set<Word, WordHash> seen;
    std::deque<Word>                   queue;
    EquivalenceClass                   result;
    seen.emplace(w.begin(), w.end());
    queue.emplace_back(w.begin(), w.end());
    if (seen.size() > count_cap) {
      return std::nullopt;
    }
    while (!queue.empty()) {
      Word x = std::move(queue.front());
      queue.pop_front();
      for (auto const& rel : p.relations) {
        for (int dir = 0; dir < 2; ++dir) {
          Word const& from = dir == 0 ? rel.left : rel.right;
          Word const& to   = dir == 0 ? rel.right : rel.left;
          if (from.size() > x.size()) {
            continue;
          }
          for (std::size_t pos = 0; pos + from.size() <= x.size(); ++pos) {
            if (!occurs_at(x, from, pos)) {
              continue;
            }
            auto len = x.size() - from.size() + to.size();
            if (len > len_cap) {
              result.length_truncated = true;
              continue;
            }
            Word y(x.begin(), x.begin() + pos);
            y.insert(y.end(), to.begin(), to.end());
            y.insert(y.end(), x.begin() + pos + from.size(), x.end());
            if (seen.insert(y).second) {
              if (seen.size() > count_cap) {
                return std::nullopt;
              }
              queue.push_back(std::move(y));
            }
          }
        }
      }
    }
    result.words.assign(seen.begin(), seen.end());
    std::sort(result.words.begin(), result.words.end());
    return result;
  }

}  // namespace rws
