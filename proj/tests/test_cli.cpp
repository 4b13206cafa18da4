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

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "rws/cli.hpp"
#include "rws/io.hpp"
#include "support.hpp"

using rws::test::data_path;
using rws::test::golden_path;

namespace {
  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  // "@name" stands for the fixture tests/data/name.
  Run run(std::vector<std::string> args) {
    for (auto& a : args) {
      if (a.starts_with("@")) {
        a = data_path(a.substr(1));
      }
    }
    std::ostringstream out;
    std::ostringstream err;
    int                code = rws::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  // Set RWS_UPDATE_GOLDEN=1 to rewrite the expected file instead.
  void check_golden(std::string const& name, std::string const& actual) {
    auto path = golden_path(name);
    if (std::getenv("RWS_UPDATE_GOLDEN") != nullptr) {
      std::ofstream(path, std::ios::binary) << actual;
      return;
    }
    REQUIRE_MESSAGE(std::filesystem::exists(path), "missing golden " << path);
    CHECK(rws::read_file(path) == actual);
  }

  struct Case {
    std::string              golden;
    std::vector<std::string> args;
    int                      code;
  };

  std::string temp_file(std::string const& name) {
    return (std::filesystem::temp_directory_path()
            / ("rws_test_cli_" + std::to_string(::getpid()) + "_" + name))
        .string();
  }
}  // namespace

TEST_CASE("command outputs") {
  std::vector<Case> const cases = {
      {"nf_b3_bb", {"nf", "--system", "@b3.rws", "--word", "b b"}, 0},
      {"nf_b3_ainv", {"nf", "--system", "@b3.rws", "--word", "a^-1 c"}, 0},
      {"nf_b3_json", {"nf", "--system", "@b3.rws", "--word", "b^-1 a a a", "--json"}, 0},
      {"nf_empty", {"nf", "--system", "@empty.rws", "--word", "a a^-1 a"}, 0},
      {"nf_presentation",
       {"nf", "--presentation", "@commuting_pair.pres", "--word", "b a b a", "--order", "b > a"},
       0},
      {"complete_p3_coloring",
       {"complete", "--raag", "@p3.g", "--order", "b > b^-1 > a > a^-1 > c > c^-1"},
       0},
      {"complete_p3_steps3", {"complete", "--raag", "@p3.g", "--max-steps", "3"}, 4},
      {"complete_free_group", {"complete", "--presentation", "@free_group2.pres"}, 0},
      {"complete_b3_json",
       {"complete", "--presentation", "@b3.pres", "--order",
        "c > c^-1 > b > b^-1 > a > a^-1", "--max-steps", "2", "--json"},
       4},
      {"embed_b3_precompleted", {"embed", "--precompleted", "@b3.rws"}, 0},
      {"embed_b3_json", {"embed", "--precompleted", "@b3.rws", "--json"}, 0},
      {"embed_bicyclic", {"embed", "--presentation", "@bicyclic.pres"}, 5},
      {"embed_c4", {"embed", "--raag", "@c4.g", "--check-monoid", "@c4_monoid.pres", "--check-length", "4"}, 0},
      {"embed_k3", {"embed", "--raag", "@k3.g"}, 0},
      {"adian_commuting", {"adian", "--presentation", "@commuting_pair.pres"}, 0},
      {"adian_right_cycle", {"adian", "--presentation", "@right_cycle.pres"}, 5},
      {"adian_free_abelian3_json",
       {"adian", "--presentation", "@free_abelian3.pres", "--json"},
       5},
      {"raag_p3_color", {"raag", "--graph", "@p3.g", "--color"}, 0},
      {"raag_k3_color", {"raag", "--graph", "@k3.g", "--color"}, 6},
      {"raag_c5_color_json", {"raag", "--graph", "@c5.g", "--color", "--json"}, 6},
      {"raag_p3_nf",
       {"raag", "--graph", "@p3.g", "--nf", "a b c", "--nf", "c^-1 a b a^-1 c"},
       0},
      {"raag_p3_emit", {"raag", "--graph", "@p3.g", "--emit-presentation", "--emit-re0"}, 0},
      {"raag_c5_verify", {"raag", "--graph", "@c5.g", "--verify", "4"}, 0},
  };
  for (auto const& c : cases) {
    CAPTURE(c.golden);
    auto r = run(c.args);
    CHECK_MESSAGE(r.code == c.code, r.err);
    check_golden(c.golden + ".out", r.out);
  }
}

TEST_CASE("trace files") {
  auto log  = temp_file("trace.log");
  auto json = temp_file("trace.json");
  auto r = run({"complete", "--raag", "@p3.g", "--max-steps", "2", "--trace", log,
                "--trace-json", json});
  CHECK(r.code == 4);
  check_golden("trace_p3_steps2.log", rws::read_file(log));
  check_golden("trace_p3_steps2.json", rws::read_file(json));
  std::filesystem::remove(log);
  std::filesystem::remove(json);
}

TEST_CASE("repeated runs print the same bytes") {
  std::vector<std::string> args{"complete", "--raag", "@c5.g", "--max-steps", "3", "--json"};
  auto first = run(args);
  for (int i = 0; i < 3; ++i) {
    CHECK(run(args).out == first.out);
  }
}

TEST_CASE("input errors") {
  struct Bad {
    std::vector<std::string> args;
    int                      code;
    std::string              err_fragment;
  };
  std::vector<Bad> const bad = {
      {{}, 2, "error:"},
      {{"frobnicate"}, 2, "error:"},
      {{"nf", "--system", "@b3.rws"}, 2, "--word"},
      {{"nf", "--system", "@b3.rws", "--word", "z"}, 2, "UnknownGenerator"},
      {{"nf", "--system", "@b3.rws", "--presentation", "@b3.pres", "--word", "a"}, 2, "error"},
      {{"nf", "--system", "@missing.rws", "--word", "a"}, 2, "error"},
      {{"nf", "--system", "@swap.rws", "--word", "a", "--fuel", "10"}, 3, "FuelExhausted"},
      {{"complete", "--raag", "@p3.g", "--max-steps", "0"}, 2, "error"},
      {{"complete", "--raag", "@p3.g", "--order", "a > b"}, 2, "InvalidOrder"},
      {{"adian", "--presentation", "@empty_side.pres"}, 2, "EmptyRelationSide"},
      {{"adian", "--presentation", "@b3.pres"}, 2, "NonPositivePresentation"},
      {{"embed"}, 2, "needs"},
      {{"embed", "--raag", "@p3.g", "--presentation", "@b3.pres"}, 2, "combined"},
      {{"embed", "--presentation", "@commuting_pair.pres"}, 2, "error"},
      {{"raag", "--graph", "@b3.pres"}, 2, "ParseError"},
  };
  for (auto const& b : bad) {
    auto r = run(b.args);
    CAPTURE(r.err);
    CHECK(r.code == b.code);
    CHECK(r.err.find(b.err_fragment) != std::string::npos);
  }
}

TEST_CASE("help and version") {
  auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("complete") != std::string::npos);
  auto v = run({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out == "rws 1.0.0\n");
}
