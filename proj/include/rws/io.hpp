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

// Text formats and structured exports.
//
// Presentation files:   kind: group|monoid / gens: a b c / rel: a a a = c
// System files:         gens: ... / rule: a a a -> c / optional order: ...
// Graph files:          vertices: a b c / edge: a b
// Colouring export:     color: a white
// Blank lines and everything after '#' are ignored.  Parse errors are
// Error(kParse) with the line number.

#ifndef RWS_IO_HPP_
#define RWS_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "rws/completion.hpp"
#include "rws/core.hpp"
#include "rws/embedding.hpp"
#include "rws/ordering.hpp"
#include "rws/raag.hpp"
#include "rws/rewriting.hpp"

namespace rws {

  using Json = nlohmann::ordered_json;

  // Throws Error(kInvalidArgument) if the file cannot be read.
  std::string read_file(std::filesystem::path const& path);

  // An optional order: line is returned separately; the presentation itself
  // has no order.
  struct PresentationFile {
    Presentation               presentation;
    std::optional<LetterOrder> order;
  };

  PresentationFile parse_presentation(std::string_view text);
  std::string      format_presentation(Presentation const& p);

  // With an order: line the system is order-backed and every rule must
  // decrease.  A kind: line is accepted and ignored.
  RewritingSystem parse_system(std::string_view text);
  std::string     format_system(RewritingSystem const& rs);

  DefiningGraph parse_graph(std::string_view text);
  std::string   format_graph(DefiningGraph const& g);
  std::string   format_coloring(DefiningGraph const& g, Coloring const& c);

  // One line per event: "step 2 overlap 5 1 len 1 | cp ... | nf ... | new_rule 9".
  std::string trace_log(CompletionOutcome const& out);

  Json rule_to_json(Rule const& r, Alphabet const& alphabet);
  Json system_to_json(RewritingSystem const& rs);
  // status, exhausted, steps_run, steps[].events[] (when traced) and the
  // final system.
  Json trace_to_json(CompletionOutcome const& out);
  Json verdict_to_json(EmbeddingVerdict const& v);
  Json adian_to_json(AdianResult const& a);

}  // namespace rws

#endif  // RWS_IO_HPP_
