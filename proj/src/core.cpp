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

#include "rws/core.hpp"

#include <algorithm>
#include <sstream>

#include "rws/error.hpp"

namespace rws {

  std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::kParse: return "ParseError";
      case ErrorCode::kUnknownGenerator: return "UnknownGenerator";
      case ErrorCode::kMalformedExponent: return "MalformedExponent";
      case ErrorCode::kInvalidAlphabet: return "InvalidAlphabet";
      case ErrorCode::kInvalidArgument: return "InvalidArgument";
      case ErrorCode::kInvalidOrder: return "InvalidOrder";
      case ErrorCode::kInvalidGraph: return "InvalidGraph";
      case ErrorCode::kTrivialRule: return "TrivialRule";
      case ErrorCode::kDuplicateRule: return "DuplicateRule";
      case ErrorCode::kNonDecreasingRule: return "NonDecreasingRule";
      case ErrorCode::kFuelExhausted: return "FuelExhausted";
      case ErrorCode::kEmptyRelationSide: return "EmptyRelationSide";
      case ErrorCode::kNonPositivePresentation:
        return "NonPositivePresentation";
      case ErrorCode::kNonPositiveInput: return "NonPositiveInput";
      case ErrorCode::kMissingTrace: return "MissingTrace";
    }
    return "Unknown";
  }

  std::size_t WordHash::operator()(Word const& w) const noexcept {
    // FNV-1a over letter codes.
    std::size_t h = 1469598103934665603ULL;
    for (auto l : w) {
      h ^= l.code() + 1;
      h *= 1099511628211ULL;
    }
    return h;
  }

  namespace {
    bool valid_name(std::string_view name) {
      if (name.empty() || name == "1") {
        return false;
      }
      return std::none_of(name.begin(), name.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) || c == '^'
               || c == '=' || c == '>' || c == '#' || c == ',';
      });
    }
  }  // namespace

  Alphabet::Alphabet(std::vector<std::string> names) : _names(std::move(names)) {
    for (std::size_t i = 0; i < _names.size(); ++i) {
      if (!valid_name(_names[i])) {
        throw Error(ErrorCode::kInvalidAlphabet,
                    "invalid generator name \"" + _names[i] + "\"");
      }
      if (!_index.emplace(_names[i], i).second) {
        throw Error(ErrorCode::kInvalidAlphabet,
                    "duplicate generator \"" + _names[i] + "\"");
      }
    }
  }

  std::string const& Alphabet::name(std::size_t generator) const {
    if (generator >= _names.size()) {
      throw Error(ErrorCode::kUnknownGenerator,
                  "generator index " + std::to_string(generator)
                      + " out of range");
    }
    return _names[generator];
  }

  std::size_t Alphabet::index(std::string_view name) const {
    auto it = _index.find(std::string(name));
    if (it == _index.end()) {
      throw Error(ErrorCode::kUnknownGenerator,
                  "unknown generator \"" + std::string(name) + "\"");
    }
    return it->second;
  }

  bool Alphabet::contains(std::string_view name) const {
    return _index.contains(std::string(name));
  }

  void Presentation::validate() const {
    auto check = [this](Word const& w) {
      for (auto l : w) {
        if (l.generator() >= alphabet.size()) {
          throw Error(ErrorCode::kUnknownGenerator,
                      "relation uses a generator outside the alphabet");
        }
        if (kind == PresentationKind::kMonoid && !inverses_allowed
            && !l.positive()) {
          throw Error(ErrorCode::kNonPositivePresentation,
                      "inverse letter in a monoid presentation");
        }
      }
    };
    for (auto const& r : relations) {
      check(r.left);
      check(r.right);
    }
  }

  Word free_reduce(std::span<Letter const> w) {
    // A stack scan cancels every x x^-1 pair; the result is the unique freely
    // reduced word equivalent to w.
    Word out;
    out.reserve(w.size());
    for (auto l : w) {
      if (!out.empty() && out.back() == l.inverse()) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return out;
  }

  bool is_positive(std::span<Letter const> w) noexcept {
    return std::all_of(
        w.begin(), w.end(), [](Letter l) { return l.positive(); });
  }

  Word inverse(std::span<Letter const> w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back(it->inverse());
    }
    return out;
  }

  Word concat(std::span<Letter const> a, std::span<Letter const> b) {
    Word out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
  }

  Word concat(std::span<Letter const> a,
              std::span<Letter const> b,
              std::span<Letter const> c) {
    Word out;
    out.reserve(a.size() + b.size() + c.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    out.insert(out.end(), c.begin(), c.end());
    return out;
  }

  bool occurs_at(std::span<Letter const> hay,
                 std::span<Letter const> needle,
                 std::size_t             pos) noexcept {
    if (pos > hay.size() || needle.size() > hay.size() - pos) {
      return false;
    }
    return std::equal(needle.begin(), needle.end(), hay.begin() + pos);
  }

  Presentation group_to_monoid(Presentation const& p) {
    if (p.kind != PresentationKind::kGroup) {
      throw Error(ErrorCode::kInvalidArgument,
                  "group_to_monoid expects a group presentation");
    }
    Presentation out{p.alphabet, p.relations, PresentationKind::kMonoid, true};
    for (std::size_t x = 0; x < p.alphabet.size(); ++x) {
      Letter pos(x, 1);
      out.relations.push_back({Word{pos, pos.inverse()}, Word{}});
      out.relations.push_back({Word{pos.inverse(), pos}, Word{}});
    }
    return out;
  }

  Word parse_word(std::string_view text, Alphabet const& alphabet) {
    std::istringstream in{std::string(text)};
    std::string        token;
    Word               out;
    bool               saw_identity = false;
    std::size_t        tokens       = 0;
    while (in >> token) {
      ++tokens;
      if (token == "1") {
        saw_identity = true;
        continue;
      }
      int  sign  = 1;
      auto caret = token.find('^');
      if (caret != std::string::npos) {
        auto exponent = token.substr(caret + 1);
        if (exponent != "-1") {
          throw Error(ErrorCode::kMalformedExponent,
                      "malformed exponent in \"" + token + "\"");
        }
        sign  = -1;
        token = token.substr(0, caret);
      }
      out.emplace_back(alphabet.index(token), sign);
    }
    if (saw_identity && tokens > 1) {
      throw Error(ErrorCode::kParse,
                  "\"1\" denotes the empty word and cannot be combined");
    }
    return out;
  }

  std::string format_letter(Letter l, Alphabet const& alphabet) {
    std::string out = alphabet.name(l.generator());
    if (!l.positive()) {
      out += "^-1";
    }
    return out;
  }

  std::string format_word(std::span<Letter const> w, Alphabet const& alphabet) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += format_letter(w[i], alphabet);
    }
    return out;
  }

}  // namespace rws
