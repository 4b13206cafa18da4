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

#include "rws/ordering.hpp"

#include <algorithm>
#include <limits>

#include "rws/error.hpp"

namespace rws {

  LetterOrder::LetterOrder(std::vector<Letter> descending)
      : _descending(std::move(descending)) {
    if (_descending.size() % 2 != 0) {
      throw Error(ErrorCode::kInvalidOrder,
                  "an order must rank every generator and its inverse");
    }
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    _rank.assign(_descending.size(), unset);
    for (std::size_t i = 0; i < _descending.size(); ++i) {
      auto code = _descending[i].code();
      if (code >= _rank.size() || _rank[code] != unset) {
        throw Error(ErrorCode::kInvalidOrder,
                    "an order must list every signed letter exactly once");
      }
      _rank[code] = _descending.size() - 1 - i;
    }
  }

  LetterOrder LetterOrder::interleaved(std::size_t generators) {
    std::vector<std::size_t> gens(generators);
    for (std::size_t i = 0; i < generators; ++i) {
      gens[i] = i;
    }
    return interleaved(gens);
  }

  LetterOrder LetterOrder::interleaved(std::span<std::size_t const> generators) {
    std::vector<Letter> desc;
    desc.reserve(2 * generators.size());
    for (auto g : generators) {
      desc.emplace_back(g, 1);
      desc.emplace_back(g, -1);
    }
    return LetterOrder(std::move(desc));
  }

  std::strong_ordering compare_shortlex(LetterOrder const&      order,
                                        std::span<Letter const> w1,
                                        std::span<Letter const> w2) {
    if (w1.size() != w2.size()) {
      return w1.size() <=> w2.size();
    }
    for (std::size_t i = 0; i < w1.size(); ++i) {
      if (w1[i] != w2[i]) {
        return order.compare(w1[i], w2[i]);
      }
    }
    return std::strong_ordering::equal;
  }

  std::optional<OrientedPair> orient(LetterOrder const&      order,
                                     std::span<Letter const> u,
                                     std::span<Letter const> v) {
    auto c = compare_shortlex(order, u, v);
    if (c == 0) {
      return std::nullopt;
    }
    if (c > 0) {
      return OrientedPair{Word(u.begin(), u.end()), Word(v.begin(), v.end())};
    }
    return OrientedPair{Word(v.begin(), v.end()), Word(u.begin(), u.end())};
  }

  namespace {
    std::string_view trim(std::string_view s) {
      auto is_space = [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) != 0;
      };
      while (!s.empty() && is_space(s.front())) {
        s.remove_prefix(1);
      }
      while (!s.empty() && is_space(s.back())) {
        s.remove_suffix(1);
      }
      return s;
    }
  }  // namespace

  LetterOrder parse_order(std::string_view text, Alphabet const& alphabet) {
    text = trim(text);
    if (text.starts_with("order:")) {
      text = trim(text.substr(6));
    }
    std::vector<Letter> letters;
    while (true) {
      auto gt    = text.find('>');
      auto token = trim(text.substr(0, gt));
      if (token.empty()) {
        throw Error(ErrorCode::kInvalidOrder, "empty entry in order");
      }
      auto w = parse_word(token, alphabet);
      if (w.size() != 1) {
        throw Error(ErrorCode::kInvalidOrder,
                    "order entries must be single letters, got \""
                        + std::string(token) + "\"");
      }
      letters.push_back(w.front());
      if (gt == std::string_view::npos) {
        break;
      }
      text = text.substr(gt + 1);
    }
    bool shorthand
        = letters.size() == alphabet.size()
          && std::all_of(letters.begin(), letters.end(), [](Letter l) {
               return l.positive();
             });
    if (shorthand && !alphabet.empty()) {
      std::vector<std::size_t> gens;
      for (auto l : letters) {
        gens.push_back(l.generator());
      }
      std::vector<std::size_t> sorted = gens;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorCode::kInvalidOrder, "generator listed twice");
      }
      return LetterOrder::interleaved(gens);
    }
    if (letters.size() != alphabet.letter_codes()) {
      throw Error(ErrorCode::kInvalidOrder,
                  "order must list every signed letter exactly once");
    }
    return LetterOrder(std::move(letters));
  }

  std::string format_order(LetterOrder const& order, Alphabet const& alphabet) {
    std::string out;
    for (auto l : order.descending()) {
      if (!out.empty()) {
        out += " > ";
      }
      out += format_letter(l, alphabet);
    }
    return out;
  }

}  // namespace rws
