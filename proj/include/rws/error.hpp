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

#ifndef RWS_ERROR_HPP_
#define RWS_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace rws {

  enum class ErrorCode {
    kParse,
    kUnknownGenerator,
    kMalformedExponent,
    kInvalidAlphabet,
    kInvalidArgument,
    kInvalidOrder,
    kInvalidGraph,
    kTrivialRule,
    kDuplicateRule,
    kNonDecreasingRule,
    kFuelExhausted,
    kEmptyRelationSide,
    kNonPositivePresentation,
    kNonPositiveInput,
    kMissingTrace,
  };

  std::string_view to_string(ErrorCode code) noexcept;

  // Every failure raised by the library carries a code so the CLI can map it
  // onto a stable exit status.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(what), _code(code) {}

    [[nodiscard]] ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

}  // namespace rws

#endif  // RWS_ERROR_HPP_
