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

#include "rws/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "rws/completion.hpp"
#include "rws/embedding.hpp"
#include "rws/error.hpp"
#include "rws/io.hpp"
#include "rws/raag.hpp"

namespace rws::cli {

  namespace {
    struct Budgets {
      std::size_t steps  = 10;
      std::size_t rules  = 10000;
      std::size_t length = 32;

      [[nodiscard]] CompletionConfig config(bool trace) const {
        CompletionConfig c;
        c.max_steps       = steps;
        c.max_rules       = rules;
        c.max_rule_length = length;
        c.record_trace    = trace;
        return c;
      }
    };

    void add_budgets(CLI::App* app, Budgets& b) {
      app->add_option("--max-steps", b.steps, "Completion steps")
          ->capture_default_str()
          ->check(CLI::PositiveNumber);
      app->add_option("--max-rules", b.rules, "Total rules")
          ->capture_default_str()
          ->check(CLI::PositiveNumber);
      app->add_option("--max-rule-length",
                      b.length,
                      "Longest lhs kept (0 = no limit)")
          ->capture_default_str();
    }

    // An existing file's order: line, or the text itself.
    LetterOrder resolve_order(std::string const& text_or_file, Alphabet const& a) {
      std::error_code ec;
      if (!std::filesystem::is_regular_file(text_or_file, ec)) {
        return parse_order(text_or_file, a);
      }
      auto        text = read_file(text_or_file);
      std::size_t pos  = 0;
      while (pos < text.size()) {
        auto nl   = text.find('\n', pos);
        auto line = text.substr(pos, nl - pos);
        pos       = nl == std::string::npos ? text.size() : nl + 1;
        auto b    = line.find_first_not_of(" \t");
        if (b != std::string::npos && line.compare(b, 6, "order:") == 0) {
          return parse_order(line.substr(b), a);
        }
      }
      throw Error(ErrorCode::kParse, "no order: line in " + text_or_file);
    }

    LetterOrder pick_order(std::string const&                text_or_file,
                           std::optional<LetterOrder> const& from_file,
                           Alphabet const&                   a) {
      if (!text_or_file.empty()) {
        return resolve_order(text_or_file, a);
      }
      if (from_file) {
        return *from_file;
      }
      return LetterOrder::interleaved(a.size());
    }

    // Colouring order for bipartite graphs, interleaved otherwise.
    LetterOrder default_raag_order(DefiningGraph const& g) {
      auto c = two_coloring(g);
      if (auto const* coloring = std::get_if<Coloring>(&c)) {
        return coloring_order(g, *coloring);
      }
      return LetterOrder::interleaved(g.size());
    }

    void print_json(std::ostream& out, Json const& j) {
      out << j.dump(2) << '\n';
    }

    void print_rules(std::ostream& out, RewritingSystem const& rs) {
      for (auto const& r : rs.rules()) {
        out << r.id() << ": " << format_rule(r, rs.alphabet());
        if (r.step() != 0) {
          out << "  [step " << r.step();
          if (r.parents()) {
            out << "; from " << r.parents()->first << ", "
                << r.parents()->second;
          }
          out << ']';
        }
        out << '\n';
      }
    }

    void write_text(std::string const& path, std::string const& text) {
      std::ofstream f(path, std::ios::binary);
      if (!f || !(f << text)) {
        throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // nf
    ////////////////////////////////////////////////////////////////////////

    struct NfArgs {
      std::string system, presentation, order, word;
      std::size_t fuel = 100000;
      bool        json = false;
      Budgets     budgets;
    };

    int cmd_nf(NfArgs const& a, std::ostream& out, std::ostream& err) {
      RewritingSystem rs;
      bool            complete = true;
      if (!a.system.empty()) {
        rs = parse_system(read_file(a.system));
        if (!a.order.empty()) {
          auto order = resolve_order(a.order, rs.alphabet());
          rs = RewritingSystem(
              rs.alphabet(), {rs.rules().begin(), rs.rules().end()}, order);
        }
      } else {
        auto pf    = parse_presentation(read_file(a.presentation));
        auto order = pick_order(a.order, pf.order, pf.presentation.alphabet);
        auto res   = knuth_bendix(orient_presentation(pf.presentation, order),
                                order,
                                a.budgets.config(false));
        complete   = res.complete();
        rs         = std::move(res.system);
      }
      auto w  = parse_word(a.word, rs.alphabet());
      auto nf = normal_form(rs, w, rs.order_backed() ? kUnlimitedFuel : a.fuel);
      if (!complete) {
        err << "warning: completion stopped at its budget; the result may not "
               "be the unique normal form\n";
      }
      if (a.json) {
        Json j;
        j["word"]        = format_word(w, rs.alphabet());
        j["normal_form"] = format_word(nf, rs.alphabet());
        j["complete"]    = complete;
        print_json(out, j);
      } else {
        out << format_word(nf, rs.alphabet()) << '\n';
      }
      return kOk;
    }

    ////////////////////////////////////////////////////////////////////////
    // complete
    ////////////////////////////////////////////////////////////////////////

    struct CompleteArgs {
      std::string system, presentation, raag, order, trace, trace_json;
      bool        json = false;
      Budgets     budgets;
    };

    int cmd_complete(CompleteArgs const& a, std::ostream& out, std::ostream&) {
      RewritingSystem seed;
      std::optional<LetterOrder> order;
      if (!a.system.empty()) {
        seed = parse_system(read_file(a.system));
        order = pick_order(a.order, seed.order(), seed.alphabet());
      } else if (!a.presentation.empty()) {
        auto pf = parse_presentation(read_file(a.presentation));
        order   = pick_order(a.order, pf.order, pf.presentation.alphabet);
        seed    = orient_presentation(pf.presentation, *order);
      } else {
        auto g = parse_graph(read_file(a.raag));
        order  = a.order.empty() ? LetterOrder::interleaved(g.size())
                                 : resolve_order(a.order, g.vertices());
        seed   = raag_re0(g, *order);
      }
      bool const trace = !a.trace.empty() || !a.trace_json.empty();
      auto res = knuth_bendix(seed, *order, a.budgets.config(trace));
      if (!a.trace.empty()) {
        write_text(a.trace, trace_log(res));
      }
      if (!a.trace_json.empty()) {
        write_text(a.trace_json, trace_to_json(res).dump(2) + "\n");
      }
      if (a.json) {
        auto j = trace_to_json(res);
        j.erase("steps");
        print_json(out, j);
      } else {
        out << "status: " << to_string(res.status);
        if (res.exhausted) {
          out << " (" << to_string(*res.exhausted) << ')';
        }
        out << "\nsteps: " << res.steps_run << "\nrules: " << res.system.size()
            << " (" << res.system.size() - seed.size() << " created)\n";
        print_rules(out, res.system);
      }
      return res.complete() ? kOk : kBudget;
    }

    ////////////////////////////////////////////////////////////////////////
    // embed
    ////////////////////////////////////////////////////////////////////////

    struct EmbedArgs {
      std::string presentation, raag, precompleted, order, check_monoid;
      std::size_t check_length = 4;
      std::size_t fuel         = 100000;
      bool        json         = false;
      Budgets     budgets;
    };

    int cmd_embed(EmbedArgs const& a, std::ostream& out, std::ostream& err) {
      EmbeddingVerdict v;
      if (!a.precompleted.empty()) {
        auto rs = parse_system(read_file(a.precompleted));
        Presentation p{rs.alphabet(), {}, PresentationKind::kGroup};
        if (!a.presentation.empty()) {
          p = parse_presentation(read_file(a.presentation)).presentation;
          if (!(p.alphabet == rs.alphabet())) {
            throw Error(ErrorCode::kInvalidArgument,
                        "presentation and system use different generators");
          }
        }
        v = embed_verdict_precompleted(p, rs, a.fuel);
      } else if (!a.raag.empty()) {
        auto g     = parse_graph(read_file(a.raag));
        auto order = a.order.empty() ? default_raag_order(g)
                                     : resolve_order(a.order, g.vertices());
        v = embed_verdict(
            raag_presentation(g), raag_re0(g, order), order,
            a.budgets.config(true));
      } else {
        auto pf = parse_presentation(read_file(a.presentation));
        if (pf.presentation.kind != PresentationKind::kGroup) {
          throw Error(ErrorCode::kInvalidArgument,
                      "embed needs a group presentation (kind: group)");
        }
        auto order = pick_order(a.order, pf.order, pf.presentation.alphabet);
        v = embed_verdict(pf.presentation, order, a.budgets.config(true));
      }

      std::optional<PartitionComparison> check;
      if (!a.check_monoid.empty() && v.positive_system) {
        auto n = parse_presentation(read_file(a.check_monoid)).presentation;
        if (!(n.alphabet == v.system.alphabet())) {
          throw Error(ErrorCode::kInvalidArgument,
                      "monoid presentation uses different generators");
        }
        check = compare_partitions(n, *v.positive_system, a.check_length);
      } else if (!a.check_monoid.empty()) {
        err << "note: no positive system to compare against\n";
      }

      if (a.json) {
        auto j = verdict_to_json(v);
        if (check) {
          Json c;
          c["max_length"]    = a.check_length;
          c["words_checked"] = check->words_checked;
          c["agrees"]        = check->agrees();
          c["capped"]        = check->capped;
          c["conclusive"]    = false;
          j["monoid_check"]  = c;
        }
        print_json(out, j);
      } else {
        auto const& al = v.system.alphabet();
        out << "status: " << to_string(v.status) << '\n';
        if (!v.reason.empty()) {
          out << "reason: " << v.reason << '\n' << "detail: " << v.detail
              << '\n';
        }
        out << "c_plus: " << to_string(v.c_plus.status) << '\n';
        for (auto id : v.c_plus.violations) {
          out << "  violation " << id << ": "
              << format_rule(v.system.rule(id), al) << '\n';
        }
        out << "provenance: "
            << (!v.provenance           ? "not examined"
                : v.provenance->holds() ? "holds"
                                        : "counterexample")
            << '\n';
        if (v.provenance && !v.provenance->holds()) {
          out << "  " << v.provenance->detail << '\n';
        }
        if (v.adian) {
          out << std::boolalpha << "adian: left_cycle "
              << v.adian->left_has_cycle
              << " right_cycle " << v.adian->right_has_cycle << '\n';
        }
        if (v.positive_system) {
          out << "positive rules: " << v.positive_system->size() << '\n';
          print_rules(out, *v.positive_system);
        }
        if (check) {
          out << "monoid check up to length " << a.check_length
              << " (necessary condition only): "
              << (check->agrees() ? "no disagreement" : "disagreement");
          if (check->mismatch) {
            out << " on " << format_word(check->mismatch->first, al) << " , "
                << format_word(check->mismatch->second, al);
          }
          if (check->capped) {
            out << " (some classes capped)";
          }
          out << '\n';
        }
      }
      return v.status == Verdict::kEmbeds ? kOk : kInconclusive;
    }

    ////////////////////////////////////////////////////////////////////////
    // adian
    ////////////////////////////////////////////////////////////////////////

    int cmd_adian(std::string const& path, bool json, std::ostream& out) {
      auto p = parse_presentation(read_file(path)).presentation;
      auto r = adian_criterion(adian_graphs(p));
      if (json) {
        print_json(out, adian_to_json(r));
      } else {
        out << std::boolalpha << "left_cycle: " << r.left_has_cycle
            << "\nright_cycle: " << r.right_has_cycle
            << "\nembeds_by_adian: " << r.embeds_by_adian() << '\n';
      }
      return r.embeds_by_adian() ? kOk : kInconclusive;
    }

    ////////////////////////////////////////////////////////////////////////
    // raag
    ////////////////////////////////////////////////////////////////////////

    struct RaagArgs {
      std::string              graph, order;
      bool                     presentation = false, re0 = false, color = false;
      std::vector<std::string> nf;
      std::size_t              verify = 0;
      bool                     json   = false;
    };

    Json check_to_json(ConditionCheck const& c) {
      Json j;
      j["passed"]  = c.passed;
      j["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
      j["detail"]  = c.detail;
      return j;
    }

    int cmd_raag(RaagArgs const& a, std::ostream& out) {
      auto g     = parse_graph(read_file(a.graph));
      auto order = a.order.empty() ? LetterOrder::interleaved(g.size())
                                   : resolve_order(a.order, g.vertices());
      auto const& al   = g.vertices();
      int         code = kOk;
      Json        j    = Json::object();

      if (a.presentation) {
        auto text = format_presentation(raag_presentation(g));
        a.json ? void(j["presentation"] = text) : void(out << text);
      }
      if (a.re0) {
        auto re0 = raag_re0(g, order);
        if (a.json) {
          j["re0"] = system_to_json(re0);
        } else {
          out << format_system(re0);
        }
      }
      if (a.color) {
        auto c = two_coloring(g);
        if (auto const* coloring = std::get_if<Coloring>(&c)) {
          if (a.json) {
            Json colours = Json::object();
            for (std::size_t v = 0; v < g.size(); ++v) {
              colours[al.name(v)]
                  = coloring->colour[v] == Colour::kBlack ? "black" : "white";
            }
            j["coloring"] = colours;
            j["coloring_order"]
                = format_order(coloring_order(g, *coloring), al);
          } else {
            out << format_coloring(g, *coloring) << "order: "
                << format_order(coloring_order(g, *coloring), al) << '\n';
          }
        } else {
          std::vector<std::string> cycle;
          for (auto v : std::get<NotBipartite>(c).odd_cycle) {
            cycle.push_back(al.name(v));
          }
          if (a.json) {
            j["odd_cycle"] = cycle;
          } else {
            out << "not bipartite; odd cycle:";
            for (auto const& n : cycle) {
              out << ' ' << n;
            }
            out << '\n';
          }
          code = kNotBipartite;
        }
      }
      if (a.verify != 0) {
        auto re0 = raag_re0(g, order);
        auto res = knuth_bendix(re0, order, raag_completion_config(a.verify, true));
        auto report     = verify_structure(res, re0);
        auto genesis    = check_prefix_genesis(res);
        auto provenance = positive_provenance_ok(res);
        if (a.json) {
          Json v;
          v["steps"]                = a.verify;
          v["rules"]                = res.system.size();
          v["shape_and_prefix"]     = check_to_json(report.shape_and_prefix);
          v["right_parent_seed"]    = check_to_json(report.right_parent_seed);
          v["length_n_plus_2"]      = check_to_json(report.length_n_plus_2);
          v["overlap_length_one"]   = check_to_json(report.overlap_length_one);
          v["positivity_symmetric"] = check_to_json(report.positivity_symmetric);
          v["prefix_genesis_violations"] = genesis.size();
          v["positive_provenance"]  = provenance.holds();
          j["verify"]               = v;
        } else {
          auto line = [&](char const* name, ConditionCheck const& c) {
            out << name << ": " << (c.passed ? "pass" : "FAIL");
            if (!c.passed) {
              out << " (" << c.detail << ')';
            }
            out << '\n';
          };
          out << "rules after " << a.verify << " steps: " << res.system.size()
              << '\n';
          line("shape and prefix", report.shape_and_prefix);
          line("right parent in seed", report.right_parent_seed);
          line("length n + 2", report.length_n_plus_2);
          line("overlap length 1", report.overlap_length_one);
          line("positivity symmetric", report.positivity_symmetric);
          out << "prefix genesis violations: " << genesis.size() << '\n'
              << "positive provenance: "
              << (provenance.holds() ? "holds" : provenance.detail) << '\n';
        }
      }
      if (!a.nf.empty()) {
        RaagSolver solver(g, order);
        Json       forms = Json::array();
        for (auto const& text : a.nf) {
          auto nf = format_word(solver.normal_form(parse_word(text, al)), al);
          if (a.json) {
            forms.push_back({{"word", text}, {"normal_form", nf}});
          } else {
            out << nf << '\n';
          }
        }
        if (a.json) {
          j["normal_forms"] = forms;
        }
      }
      if (a.json) {
        print_json(out, j);
      }
      return code;
    }

    int exit_code_for(ErrorCode c) {
      switch (c) {
        case ErrorCode::kFuelExhausted: return kFuel;
        case ErrorCode::kMissingTrace: return kInternal;
        default: return kBadInput;
      }
    }
  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"String rewriting, Knuth-Bendix completion and monoid "
                 "embedding checks",
                 "rws"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "rws 1.0.0");

    NfArgs nf;
    auto*  nf_cmd = app.add_subcommand("nf", "Normal form of a word");
    auto*  nf_src = nf_cmd->add_option_group("source");
    nf_src->add_option("--system", nf.system, "System file")
        ->check(CLI::ExistingFile);
    nf_src->add_option("--presentation", nf.presentation, "Presentation file")
        ->check(CLI::ExistingFile);
    nf_src->require_option(1);
    nf_cmd->add_option("--order", nf.order, "Order text or file");
    nf_cmd->add_option("--word", nf.word, "Word, e.g. \"a b^-1\"")->required();
    nf_cmd->add_option("--fuel", nf.fuel, "Reduction steps for unordered systems")
        ->capture_default_str();
    nf_cmd->add_flag("--json", nf.json, "Structured output");
    add_budgets(nf_cmd, nf.budgets);

    CompleteArgs cp;
    auto* cp_cmd = app.add_subcommand("complete", "Knuth-Bendix completion");
    auto* cp_src = cp_cmd->add_option_group("source");
    cp_src->add_option("--system", cp.system, "Seed system file")
        ->check(CLI::ExistingFile);
    cp_src->add_option("--presentation", cp.presentation, "Presentation file")
        ->check(CLI::ExistingFile);
    cp_src->add_option("--raag", cp.raag, "Graph file; seeds with its commutation and free-reduction rules")
        ->check(CLI::ExistingFile);
    cp_src->require_option(1);
    cp_cmd->add_option("--order", cp.order, "Order text or file");
    cp_cmd->add_option("--trace", cp.trace, "Write the event log here");
    cp_cmd->add_option("--trace-json", cp.trace_json, "Write the JSON trace here");
    cp_cmd->add_flag("--json", cp.json, "Structured output");
    add_budgets(cp_cmd, cp.budgets);

    EmbedArgs em;
    auto* em_cmd = app.add_subcommand("embed", "Monoid-in-group embedding verdict");
    em_cmd->add_option("--presentation", em.presentation, "Group presentation file")
        ->check(CLI::ExistingFile);
    em_cmd->add_option("--raag", em.raag, "Graph file of a right-angled Artin group")
        ->check(CLI::ExistingFile);
    em_cmd->add_option("--precompleted", em.precompleted, "Complete system for the group")
        ->check(CLI::ExistingFile);
    em_cmd->add_option("--order", em.order, "Order text or file");
    em_cmd->add_option("--fuel", em.fuel, "Reduction steps for a supplied system")
        ->capture_default_str();
    em_cmd->add_option("--check-monoid", em.check_monoid,
                       "Monoid presentation to compare with the positive rules (bounded, not conclusive)")
        ->check(CLI::ExistingFile);
    em_cmd->add_option("--check-length", em.check_length, "Word length for --check-monoid")
        ->capture_default_str();
    em_cmd->add_flag("--json", em.json, "Structured output");
    add_budgets(em_cmd, em.budgets);

    std::string adian_path;
    bool        adian_json = false;
    auto* ad_cmd = app.add_subcommand("adian", "Left and right graph cycle test");
    ad_cmd->add_option("--presentation", adian_path, "Monoid presentation file")
        ->required()
        ->check(CLI::ExistingFile);
    ad_cmd->add_flag("--json", adian_json, "Structured output");

    RaagArgs rg;
    auto* rg_cmd = app.add_subcommand("raag", "Right-angled Artin group tools");
    rg_cmd->add_option("--graph", rg.graph, "Graph file")
        ->required()
        ->check(CLI::ExistingFile);
    rg_cmd->add_option("--order", rg.order, "Order text or file");
    rg_cmd->add_flag("--emit-presentation", rg.presentation, "Print the group presentation");
    rg_cmd->add_flag("--emit-re0", rg.re0, "Print the seed system");
    rg_cmd->add_flag("--color", rg.color, "Two-colour the graph");
    rg_cmd->add_option("--nf", rg.nf, "Normal form of a word (repeatable)");
    rg_cmd->add_option("--verify", rg.verify, "Complete this many steps and check the rule structure");
    rg_cmd->add_flag("--json", rg.json, "Structured output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return kOk;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (CLI::CallForVersion const&) {
      out << "rws 1.0.0\n";
      return kOk;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return kBadInput;
    }

    try {
      if (*nf_cmd) {
        return cmd_nf(nf, out, err);
      }
      if (*cp_cmd) {
        return cmd_complete(cp, out, err);
      }
      if (*em_cmd) {
        if (em.presentation.empty() && em.raag.empty() && em.precompleted.empty()) {
          err << "error: embed needs --presentation, --raag or --precompleted\n";
          return kBadInput;
        }
        if (!em.raag.empty() && (!em.presentation.empty() || !em.precompleted.empty())) {
          err << "error: --raag cannot be combined with other sources\n";
          return kBadInput;
        }
        return cmd_embed(em, out, err);
      }
      if (*ad_cmd) {
        return cmd_adian(adian_path, adian_json, out);
      }
      return cmd_raag(rg, out);
    } catch (Error const& e) {
      err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
      return exit_code_for(e.code());
    } catch (std::exception const& e) {
      err << "internal error: " << e.what() << '\n';
      return kInternal;
    }
  }

}  // namespace rws::cli
