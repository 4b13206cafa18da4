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

// The rws command-line tool.  Subcommands: nf, complete, embed, adian, raag.

#ifndef RWS_CLI_HPP_
#define RWS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace rws::cli {

  enum ExitCode : int {
    kOk            = 0,
    kInternal      = 1,
    kBadInput      = 2,  // usage, parse and validation errors
    kFuel          = 3,
    kBudget        = 4,
    kInconclusive  = 5,
    kNotBipartite  = 6,
  };

  // `args` excludes the program name.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace rws::cli

#endif  // RWS_CLI_HPP_
