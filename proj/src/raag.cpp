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

#include "rws/raag.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "rws/error.hpp"

namespace rws {

  ////////////////////////////////////////////////////////////////////////
  // DefiningGraph
  ////////////////////////////////////////////////////////////////////////

  DefiningGraph::DefiningGraph(
      Alphabet                                         vertices,
      std::vector<std::pair<std::size_t, std::size_t>> edges)
      : _vertices(std::move(vertices)), _adjacency(_vertices.size()) {
    for (auto [a, b] : edges) {
      if (a >= size() || b >= size()) {
        throw Error(ErrorCode::kInvalidGraph, "edge endpoint out of range");
      }
      if (a == b) {
        throw Error(ErrorCode::kInvalidGraph,
                    "self-loop at " + _vertices.name(a));
      }
      _edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(_edges.begin(), _edges.end());
    if (auto it = std::adjacent_find(_edges.begin(), _edges.end());
        it != _edges.end()) {
      throw Error(ErrorCode::kInvalidGraph,
                  "repeated edge " + _vertices.name(it->first) + " - "
                      + _vertices.name(it->second));
    }
    for (auto [a, b] : _edges) {
      _adjacency[a].push_back(b);
      _adjacency[b].push_back(a);
    }
    for (auto& n : _adjacency) {
      std::sort(n.begin(), n.end());
    }
  }

  DefiningGraph DefiningGraph::complete(Alphabet vertices) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < vertices.size(); ++j) {
        edges.emplace_back(i, j);
      }
    }
    return DefiningGraph(std::move(vertices), std::move(edges));
  }

  bool DefiningGraph::adjacent(std::size_t a, std::size_t b) const {
    auto const& n = _adjacency.at(a);
    return std::binary_search(n.begin(), n.end(), b);
  }

  Presentation raag_presentation(DefiningGraph const& g) {
    Presentation p{g.vertices(), {}, PresentationKind::kGroup, false};
    for (auto [a, b] : g.edges()) {
      Letter x(a, 1);
      Letter y(b, 1);
      p.relations.push_back({Word{x, y}, Word{y, x}});
    }
    return p;
  }

  RewritingSystem raag_re0(DefiningGraph const& g, LetterOrder const& order) {
    if (order.generators() != g.size()) {
      throw Error(ErrorCode::kInvalidOrder,
                  "order does not match the graph's vertices");
    }
    std::vector<OrientedPair> pairs;
    for (auto [a, b] : g.edges()) {
      std::optional<std::size_t> first;
      for (int sa : {1, -1}) {
        for (int sb : {1, -1}) {
          Letter x(a, sa);
          Letter y(b, sb);
          auto   o = orient(order, Word{x, y}, Word{y, x});
          if (!first) {
            first = o->lhs.front().generator();
          } else if (*first != o->lhs.front().generator()) {
            throw Error(ErrorCode::kInvalidOrder,
                        "order orients the commutation rules of edge "
                            + g.vertices().name(a) + " - "
                            + g.vertices().name(b) + " inconsistently");
          }
          pairs.push_back(std::move(*o));
        }
      }
    }
    for (std::size_t v = 0; v < g.size(); ++v) {
      Letter x(v, 1);
      pairs.push_back({Word{x, x.inverse()}, Word{}});
      pairs.push_back({Word{x.inverse(), x}, Word{}});
    }
    return RewritingSystem::from_pairs(g.vertices(), std::move(pairs), order);
  }

  ////////////////////////////////////////////////////////////////////////
  // Colouring
  ////////////////////////////////////////////////////////////////////////

  std::variant<Coloring, NotBipartite> two_coloring(DefiningGraph const& g) {
    constexpr auto none = std::numeric_limits<std::size_t>::max();
    auto const     n    = g.size();
    std::vector<std::size_t> component(n, none);
    std::vector<std::size_t> parent(n, none);
    std::vector<std::size_t> depth(n, 0);
    Coloring                 c{std::vector<Colour>(n, Colour::kBlack)};

    for (std::size_t start = 0; start < n; ++start) {
      if (component[start] != none) {
        continue;
      }
      // Collect the component, then pick its root.
      std::vector<std::size_t> members{start};
      component[start] = start;
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (auto v : g.neighbours(members[i])) {
          if (component[v] == none) {
            component[v] = start;
            members.push_back(v);
          }
        }
      }
      std::sort(members.begin(), members.end());
      auto root = *std::max_element(
          members.begin(), members.end(), [&g](auto a, auto b) {
            return g.neighbours(a).size() < g.neighbours(b).size();
          });
      // max_element returns the first maximum, i.e. the earliest declared.
      std::vector<bool>       seen(n, false);
      std::deque<std::size_t> queue{root};
      seen[root]     = true;
      c.colour[root] = Colour::kBlack;
      while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        for (auto v : g.neighbours(u)) {
          if (!seen[v]) {
            seen[v]     = true;
            parent[v]   = u;
            depth[v]    = depth[u] + 1;
            c.colour[v] = c.colour[u] == Colour::kBlack ? Colour::kWhite
                                                        : Colour::kBlack;
            queue.push_back(v);
          } else if (c.colour[v] == c.colour[u]) {
            // Both tree paths from the root plus the edge u - v close an odd
            // cycle; cut the common part above the lowest common ancestor.
            std::vector<std::size_t> up_u{u};
            std::vector<std::size_t> up_v{v};
            auto                     a = u;
            auto                     b = v;
            while (depth[a] > depth[b]) {
              a = parent[a];
              up_u.push_back(a);
            }
            while (depth[b] > depth[a]) {
              b = parent[b];
              up_v.push_back(b);
            }
            while (a != b) {
              a = parent[a];
              b = parent[b];
              up_u.push_back(a);
              up_v.push_back(b);
            }
            up_v.pop_back();  // the common ancestor is already in up_u
            NotBipartite nb;
            nb.odd_cycle.assign(up_u.rbegin(), up_u.rend());
            nb.odd_cycle.insert(nb.odd_cycle.end(), up_v.begin(), up_v.end());
            return nb;
          }
        }
      }
    }
    return c;
  }

  LetterOrder coloring_order(DefiningGraph const&       g,
                             Coloring const&            c,
                             std::vector<Letter> const& black_order,
                             std::vector<Letter> const& white_order) {
    if (c.colour.size() != g.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "colouring does not match the graph");
    }
    for (auto [a, b] : g.edges()) {
      if (c.colour[a] == c.colour[b]) {
        throw Error(ErrorCode::kInvalidArgument,
                    "colouring is not proper on edge " + g.vertices().name(a)
                        + " - " + g.vertices().name(b));
      }
    }
    auto letters_of = [&](Colour k, std::vector<Letter> const& given) {
      std::vector<Letter> expected;
      for (std::size_t v = 0; v < g.size(); ++v) {
        if (c.colour[v] == k) {
          expected.emplace_back(v, 1);
          expected.emplace_back(v, -1);
        }
      }
      if (given.empty()) {
        return expected;
      }
      auto a = given;
      auto b = expected;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) {
        throw Error(ErrorCode::kInvalidOrder,
                    "within-class order must list exactly the signed letters "
                    "of that class");
      }
      return given;
    };
    auto desc  = letters_of(Colour::kBlack, black_order);
    auto white = letters_of(Colour::kWhite, white_order);
    desc.insert(desc.end(), white.begin(), white.end());
    return LetterOrder(std::move(desc));
  }

  bool is_clique(DefiningGraph const& g, std::set<std::size_t> const& s) {
    for (auto a = s.begin(); a != s.end(); ++a) {
      for (auto b = std::next(a); b != s.end(); ++b) {
        if (!g.adjacent(*a, *b)) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Structure of completed systems
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::pair<Word, Letter>>
  commutation_shape(Word const& lhs, Word const& rhs) {
    if (lhs.size() < 2 || lhs.size() != rhs.size()) {
      return std::nullopt;
    }
    auto x = lhs.back();
    if (rhs.front() != x
        || !std::equal(lhs.begin(), lhs.end() - 1, rhs.begin() + 1)) {
      return std::nullopt;
    }
    return std::make_pair(Word(lhs.begin(), lhs.end() - 1), x);
  }

  namespace {
    bool has_rule(RewritingSystem const& rs, Word const& lhs, Word const& rhs) {
      auto rules = rs.rules();
      bool found = false;
      rs.index().for_each_match_at(lhs, 0, [&](std::size_t r) {
        if (rules[r].lhs().size() == lhs.size() && rules[r].rhs() == rhs) {
          found = true;
        }
      });
      return found;
    }
  }  // namespace

  bool prefix_condition_holds(Rule const& r, RewritingSystem const& re0) {
    auto shape = commutation_shape(r.lhs(), r.rhs());
    if (!shape) {
      return false;
    }
    auto const& [u, x] = *shape;
    if (!has_rule(re0, Word{u[0], x}, Word{x, u[0]})) {
      return false;
    }
    for (std::size_t i = 1; i < u.size(); ++i) {
      if (!has_rule(re0, Word{x, u[i]}, Word{u[i], x})) {
        return false;
      }
    }
    return true;
  }

  StructureReport verify_structure(CompletionOutcome const& out,
                                   RewritingSystem const&   re0) {
    if (!out.trace_recorded) {
      throw Error(ErrorCode::kMissingTrace,
                  "structure verification needs a recorded trace");
    }
    StructureReport report;
    auto fail = [](ConditionCheck& c, RuleId id, std::string detail) {
      if (c.passed) {
        c.passed  = false;
        c.witness = id;
        c.detail  = std::move(detail);
      }
    };
    auto const& sys = out.system;
    for (auto const& r : sys.rules()) {
      if (!(r.step() == 0 && r.rhs().empty())
          && is_positive(r.lhs()) != is_positive(r.rhs())) {
        fail(report.positivity_symmetric,
             r.id(),
             "exactly one side is positive");
      }
      if (r.step() == 0) {
        continue;
      }
      if (!prefix_condition_holds(r, re0)) {
        fail(report.shape_and_prefix,
             r.id(),
             commutation_shape(r.lhs(), r.rhs())
                 ? "prefix condition fails"
                 : "not of shape u x -> x u");
      }
      if (!r.parents() || sys.rule(r.parents()->second).step() != 0) {
        fail(report.right_parent_seed,
             r.id(),
             "right parent is not a seed rule");
      }
      if (r.lhs().size() != r.step() + 2 || r.rhs().size() != r.step() + 2) {
        fail(report.length_n_plus_2,
             r.id(),
             "created at step " + std::to_string(r.step()) + " with lengths "
                 + std::to_string(r.lhs().size()) + ", "
                 + std::to_string(r.rhs().size()));
      }
      auto const* e = creating_event(out, r.id());
      if (e == nullptr) {
        fail(report.overlap_length_one, r.id(), "no creating event in trace");
      } else if (auto const* o = std::get_if<Overlap>(&e->ambiguity());
                 o == nullptr || o->v.size() != 1) {
        fail(report.overlap_length_one,
             r.id(),
             o == nullptr ? "created by an inclusion"
                          : "overlap of length " + std::to_string(o->v.size()));
      }
    }
    return report;
  }

  std::vector<PrefixGenesisViolation>
  check_prefix_genesis(CompletionOutcome const& out) {
    std::vector<PrefixGenesisViolation> violations;
    auto const&                         sys = out.system;
    auto step_of = [&](Word const& lhs, Word const& rhs) {
      std::optional<std::size_t> step;
      auto                       rules = sys.rules();
      sys.index().for_each_match_at(lhs, 0, [&](std::size_t r) {
        if (rules[r].lhs().size() == lhs.size() && rules[r].rhs() == rhs) {
          step = rules[r].step();
        }
      });
      return step;
    };
    for (auto const& r : sys.rules()) {
      if (r.step() == 0) {
        continue;
      }
      auto shape = commutation_shape(r.lhs(), r.rhs());
      if (!shape) {
        violations.push_back({r.id(), "not of shape u x -> x u"});
        continue;
      }
      auto const& [u, x] = *shape;
      for (std::size_t k = 1; k < u.size(); ++k) {
        Word prefix(u.begin(), u.begin() + k);
        auto s = step_of(concat(prefix, Word{x}), concat(Word{x}, prefix));
        if (!s || *s >= r.step()) {
          violations.push_back(
              {r.id(),
               "prefix of length " + std::to_string(k)
                   + (s ? " created at a step not earlier" : " missing")});
        }
      }
      auto xi = x.inverse();
      if (!step_of(concat(u, Word{xi}), concat(Word{xi}, u))) {
        violations.push_back({r.id(), "inverse rule u x^-1 -> x^-1 u missing"});
      }
    }
    return violations;
  }

  ////////////////////////////////////////////////////////////////////////
  // Normal forms
  ////////////////////////////////////////////////////////////////////////

  CompletionConfig raag_completion_config(std::size_t steps,
                                          bool        record_trace) {
    CompletionConfig cfg;
    cfg.max_steps       = std::max<std::size_t>(steps, 1);
    cfg.max_rules       = std::numeric_limits<std::size_t>::max();
    cfg.max_rule_length = 0;
    cfg.record_trace    = record_trace;
    return cfg;
  }

  RaagSolver::RaagSolver(DefiningGraph g, LetterOrder order)
      : _graph(std::move(g)),
        _order(std::move(order)),
        _re0(raag_re0(_graph, _order)) {}

  CompletionOutcome const&
  RaagSolver::completed_through_length(std::size_t length) {
    auto steps = std::max<std::size_t>(length, 3) - 2;
    if (!_cache || (_cached_steps < steps && !_cache->complete())) {
      _cache        = knuth_bendix(_re0, _order, raag_completion_config(steps));
      _cached_steps = steps;
    }
    return *_cache;
  }

  Word RaagSolver::normal_form(std::span<Letter const> w) {
    auto reduced = free_reduce(w);
    auto const& out = completed_through_length(reduced.size());
    return rws::normal_form(out.system, reduced);
  }

  Word raag_normal_form(DefiningGraph const&    g,
                        LetterOrder const&      order,
                        std::span<Letter const> w) {
    RaagSolver solver(g, order);
    return solver.normal_form(w);
  }

}  // namespace rws
