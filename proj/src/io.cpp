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

#include "rws/io.hpp"

#include <fstream>
#include <sstream>

#include "rws/error.hpp"

namespace rws {

  namespace {
    std::string_view trim(std::string_view s) {
      auto const ws = " \t\r\n";
      auto       b  = s.find_first_not_of(ws);
      if (b == std::string_view::npos) {
        return {};
      }
      return s.substr(b, s.find_last_not_of(ws) - b + 1);
    }

    std::vector<std::string> split_ws(std::string_view s) {
      std::istringstream       in{std::string(s)};
      std::vector<std::string> out;
      for (std::string t; in >> t;) {
        out.push_back(std::move(t));
      }
      return out;
    }

    struct Line {
      std::size_t      number;
      std::string_view key;
      std::string_view value;
    };

    [[noreturn]] void fail(std::size_t line, std::string const& what) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
    }

    std::vector<Line> keyed_lines(std::string_view text) {
      std::vector<Line> lines;
      std::size_t       number = 0;
      while (!text.empty()) {
        ++number;
        auto nl  = text.find('\n');
        auto raw = text.substr(0, nl);
        text     = nl == std::string_view::npos ? std::string_view{}
                                                : text.substr(nl + 1);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) {
          raw = raw.substr(0, hash);
        }
        raw = trim(raw);
        if (raw.empty()) {
          continue;
        }
        auto colon = raw.find(':');
        if (colon == std::string_view::npos) {
          fail(number, "expected \"key: value\", got \"" + std::string(raw) + "\"");
        }
        lines.push_back(
            {number, trim(raw.substr(0, colon)), trim(raw.substr(colon + 1))});
      }
      return lines;
    }

    // Re-raises errors from word and order parsing with the line number.
    template <typename F>
    auto at_line(std::size_t line, F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (Error const& e) {
        throw Error(e.code(), "line " + std::to_string(line) + ": " + e.what());
      }
    }

    Alphabet parse_gens(Line const& l, bool seen) {
      if (seen) {
        fail(l.number, "repeated gens line");
      }
      return at_line(l.number, [&] { return Alphabet(split_ws(l.value)); });
    }

    std::string kind_name(PresentationKind k) {
      return k == PresentationKind::kGroup ? "group" : "monoid";
    }

    Json ambiguity_fields(Ambiguity const& a, RewritingSystem const& rs) {
      Json j;
      if (auto const* o = std::get_if<Overlap>(&a)) {
        j["kind"]        = "overlap";
        j["left_rule"]   = o->left_rule;
        j["right_rule"]  = o->right_rule;
        j["overlap_len"] = o->v.size();
      } else {
        auto const& in   = std::get<Inclusion>(a);
        j["kind"]        = "inclusion";
        j["left_rule"]   = in.outer_rule;
        j["right_rule"]  = in.inner_rule;
        j["overlap_len"] = rs.contains(in.inner_rule)
                               ? rs.rule(in.inner_rule).lhs().size()
                               : 0;
      }
      j["split"] = split_position(a);
      return j;
    }
  }  // namespace

  std::string read_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(ErrorCode::kInvalidArgument,
                  "cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  PresentationFile parse_presentation(std::string_view text) {
    PresentationFile            file;
    auto&                       p = file.presentation;
    bool                        have_gens = false;
    std::optional<Line>         order_line;
    std::optional<std::size_t>  kind_line;
    for (auto const& l : keyed_lines(text)) {
      if (l.key == "kind") {
        if (kind_line) {
          fail(l.number, "repeated kind line");
        }
        kind_line = l.number;
        if (l.value == "group") {
          p.kind = PresentationKind::kGroup;
        } else if (l.value == "monoid") {
          p.kind = PresentationKind::kMonoid;
        } else {
          fail(l.number, "kind must be group or monoid");
        }
      } else if (l.key == "gens") {
        p.alphabet = parse_gens(l, have_gens);
        have_gens  = true;
      } else if (l.key == "rel") {
        if (!have_gens) {
          fail(l.number, "rel before gens");
        }
        auto eq = l.value.find('=');
        if (eq == std::string_view::npos
            || l.value.find('=', eq + 1) != std::string_view::npos) {
          fail(l.number, "a relation needs exactly one '='");
        }
        auto side = [&](std::string_view s) {
          s = trim(s);
          if (s.empty()) {
            fail(l.number, "empty relation side (write 1 for the empty word)");
          }
          return at_line(l.number, [&] { return parse_word(s, p.alphabet); });
        };
        p.relations.push_back(
            {side(l.value.substr(0, eq)), side(l.value.substr(eq + 1))});
      } else if (l.key == "order") {
        if (order_line) {
          fail(l.number, "repeated order line");
        }
        order_line = l;
      } else {
        fail(l.number, "unknown key \"" + std::string(l.key) + "\"");
      }
    }
    if (!have_gens) {
      throw Error(ErrorCode::kParse, "missing gens line");
    }
    p.validate();
    if (order_line) {
      file.order = at_line(order_line->number, [&] {
        return parse_order(order_line->value, p.alphabet);
      });
    }
    return file;
  }

  std::string format_presentation(Presentation const& p) {
    std::string out = "kind: " + kind_name(p.kind) + "\ngens:";
    for (auto const& n : p.alphabet.names()) {
      out += " " + n;
    }
    out += "\n";
    for (auto const& r : p.relations) {
      out += "rel: " + format_word(r.left, p.alphabet) + " = "
             + format_word(r.right, p.alphabet) + "\n";
    }
    return out;
  }

  RewritingSystem parse_system(std::string_view text) {
    Alphabet                  alphabet;
    bool                      have_gens = false;
    std::optional<Line>       order_line;
    std::vector<Line>         rule_lines;
    for (auto const& l : keyed_lines(text)) {
      if (l.key == "gens") {
        alphabet  = parse_gens(l, have_gens);
        have_gens = true;
      } else if (l.key == "rule") {
        rule_lines.push_back(l);
      } else if (l.key == "order") {
        if (order_line) {
          fail(l.number, "repeated order line");
        }
        order_line = l;
      } else if (l.key != "kind") {
        fail(l.number, "unknown key \"" + std::string(l.key) + "\"");
      }
    }
    if (!have_gens) {
      throw Error(ErrorCode::kParse, "missing gens line");
    }
    std::optional<LetterOrder> order;
    if (order_line) {
      order = at_line(order_line->number, [&] {
        return parse_order(order_line->value, alphabet);
      });
    }
    std::vector<Rule> rules;
    for (auto const& l : rule_lines) {
      auto arrow = l.value.find("->");
      if (arrow == std::string_view::npos) {
        fail(l.number, "a rule needs '->'");
      }
      auto lhs = trim(l.value.substr(0, arrow));
      auto rhs = trim(l.value.substr(arrow + 2));
      if (lhs.empty() || rhs.empty()) {
        fail(l.number, "empty rule side (write 1 for the empty word)");
      }
      at_line(l.number, [&] {
        rules.emplace_back(rules.size(),
                           parse_word(lhs, alphabet),
                           parse_word(rhs, alphabet));
        // Checks this rule against the order and the earlier rules now, so
        // errors point at the offending line.
        return RewritingSystem(alphabet, rules, order).size();
      });
    }
    return RewritingSystem(alphabet, std::move(rules), order);
  }

  std::string format_system(RewritingSystem const& rs) {
    std::string out = "gens:";
    for (auto const& n : rs.alphabet().names()) {
      out += " " + n;
    }
    out += "\n";
    if (rs.order()) {
      out += "order: " + format_order(*rs.order(), rs.alphabet()) + "\n";
    }
    for (auto const& r : rs.rules()) {
      out += "rule: " + format_rule(r, rs.alphabet()) + "\n";
    }
    return out;
  }

  DefiningGraph parse_graph(std::string_view text) {
    Alphabet                                         vertices;
    bool                                             have_vertices = false;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (auto const& l : keyed_lines(text)) {
      if (l.key == "vertices") {
        vertices      = parse_gens(l, have_vertices);
        have_vertices = true;
      } else if (l.key == "edge") {
        if (!have_vertices) {
          fail(l.number, "edge before vertices");
        }
        auto ends = split_ws(l.value);
        if (ends.size() == 3 && ends[2] != "2") {
          fail(l.number, "only commutation edges (label 2) are supported");
        }
        if (ends.size() != 2 && ends.size() != 3) {
          fail(l.number, "an edge names two vertices");
        }
        at_line(l.number, [&] {
          edges.emplace_back(vertices.index(ends[0]), vertices.index(ends[1]));
          return 0;
        });
      } else {
        fail(l.number, "unknown key \"" + std::string(l.key) + "\"");
      }
    }
    if (!have_vertices) {
      throw Error(ErrorCode::kParse, "missing vertices line");
    }
    return DefiningGraph(std::move(vertices), std::move(edges));
  }

  std::string format_graph(DefiningGraph const& g) {
    std::string out = "vertices:";
    for (auto const& n : g.vertices().names()) {
      out += " " + n;
    }
    out += "\n";
    for (auto [a, b] : g.edges()) {
      out += "edge: " + g.vertices().name(a) + " " + g.vertices().name(b)
             + "\n";
    }
    return out;
  }

  std::string format_coloring(DefiningGraph const& g, Coloring const& c) {
    std::string out;
    for (std::size_t v = 0; v < g.size(); ++v) {
      out += "color: " + g.vertices().name(v) + " "
             + (c.colour[v] == Colour::kBlack ? "black" : "white") + "\n";
    }
    return out;
  }

  std::string trace_log(CompletionOutcome const& out) {
    auto const&        rs = out.system;
    auto const&        a  = rs.alphabet();
    std::ostringstream log;
    for (auto const& step : out.trace) {
      for (auto const& e : step.events) {
        auto f = ambiguity_fields(e.ambiguity(), rs);
        log << "step " << step.step_index << ' '
            << f["kind"].get<std::string>() << ' '
            << f["left_rule"].get<RuleId>() << ' '
            << f["right_rule"].get<RuleId>() << " len "
            << f["overlap_len"].get<std::size_t>() << " | cp "
            << format_word(e.cp_before.left, a) << " , "
            << format_word(e.cp_before.right, a) << " | nf "
            << format_word(e.nf_left, a) << " , "
            << format_word(e.nf_right, a) << " | " << to_string(e.outcome);
        if (e.rule_id) {
          log << ' ' << *e.rule_id;
        }
        log << '\n';
      }
    }
    log << "status " << to_string(out.status);
    if (out.exhausted) {
      log << ' ' << to_string(*out.exhausted);
    }
    log << " steps " << out.steps_run << " rules " << rs.size() << '\n';
    return log.str();
  }

  Json rule_to_json(Rule const& r, Alphabet const& alphabet) {
    Json j;
    j["id"]   = r.id();
    j["lhs"]  = format_word(r.lhs(), alphabet);
    j["rhs"]  = format_word(r.rhs(), alphabet);
    j["step"] = r.step();
    if (r.parents()) {
      j["parents"] = {r.parents()->first, r.parents()->second};
    } else {
      j["parents"] = nullptr;
    }
    return j;
  }

  Json system_to_json(RewritingSystem const& rs) {
    Json j;
    j["gens"] = rs.alphabet().names();
    if (rs.order()) {
      j["order"] = format_order(*rs.order(), rs.alphabet());
    } else {
      j["order"] = nullptr;
    }
    j["rules"] = Json::array();
    for (auto const& r : rs.rules()) {
      j["rules"].push_back(rule_to_json(r, rs.alphabet()));
    }
    return j;
  }

  Json trace_to_json(CompletionOutcome const& out) {
    auto const& rs = out.system;
    auto const& a  = rs.alphabet();
    Json        j;
    j["status"] = to_string(out.status);
    if (out.exhausted) {
      j["exhausted"] = to_string(*out.exhausted);
    } else {
      j["exhausted"] = nullptr;
    }
    j["steps_run"] = out.steps_run;
    if (out.trace_recorded) {
      j["steps"] = Json::array();
    }
    for (auto const& step : out.trace) {
      Json s;
      s["step"]   = step.step_index;
      s["events"] = Json::array();
      for (auto const& e : step.events) {
        Json ev;
        ev["step"] = step.step_index;
        ev.update(ambiguity_fields(e.ambiguity(), rs));
        ev["cp_left"]  = format_word(e.cp_before.left, a);
        ev["cp_right"] = format_word(e.cp_before.right, a);
        ev["nf_left"]  = format_word(e.nf_left, a);
        ev["nf_right"] = format_word(e.nf_right, a);
        ev["outcome"]  = to_string(e.outcome);
        if (e.rule_id) {
          ev["new_rule_id"] = *e.rule_id;
        } else {
          ev["new_rule_id"] = nullptr;
        }
        s["events"].push_back(std::move(ev));
      }
      j["steps"].push_back(std::move(s));
    }
    j["system"] = system_to_json(rs);
    return j;
  }

  Json adian_to_json(AdianResult const& a) {
    Json j;
    j["left_cycle"]      = a.left_has_cycle;
    j["right_cycle"]     = a.right_has_cycle;
    j["embeds_by_adian"] = a.embeds_by_adian();
    return j;
  }

  Json verdict_to_json(EmbeddingVerdict const& v) {
    auto const& a = v.system.alphabet();
    Json        j;
    j["status"] = to_string(v.status);
    j["reason"] = v.reason;
    j["detail"] = v.detail;
    j["completion"] = to_string(v.completion);
    if (v.exhausted) {
      j["exhausted"] = to_string(*v.exhausted);
    } else {
      j["exhausted"] = nullptr;
    }
    j["steps_run"] = v.steps_run;
    j["c_plus"]    = to_string(v.c_plus.status);
    j["c_plus_violations"] = Json::array();
    for (auto id : v.c_plus.violations) {
      j["c_plus_violations"].push_back(rule_to_json(v.system.rule(id), a));
    }
    if (!v.provenance) {
      j["provenance"] = "not_examined";
    } else if (v.provenance->holds()) {
      j["provenance"] = "holds";
    } else {
      j["provenance"] = "counterexample";
      j["provenance_rule"] = *v.provenance->counterexample;
      j["provenance_detail"] = v.provenance->detail;
    }
    j["positive_rule_ids"] = Json::array();
    j["positive_rules"]    = Json::array();
    if (v.positive_system) {
      for (auto const& r : v.positive_system->rules()) {
        j["positive_rule_ids"].push_back(r.id());
        j["positive_rules"].push_back(format_rule(r, a));
      }
    }
    j["rule_count"] = v.system.size();
    j["adian"]      = v.adian ? adian_to_json(*v.adian) : Json(nullptr);
    return j;
  }

}  // namespace rws
