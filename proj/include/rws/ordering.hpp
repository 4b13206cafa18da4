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

#ifndef RWS_ORDERING_HPP_
#define RWS_ORDERING_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rws/core.hpp"

namespace rws {

  // A total order on the doubled alphabet X u X^-1.  A generator and its
  // inverse are ranked independently.
  class LetterOrder {
   public:
    // `descending` lists every signed letter exactly once, greatest first.
    explicit LetterOrder(std::vector<Letter> descending);

    // x_0 > x_0^-1 > x_1 > x_1^-1 > ... (declaration order, each generator
    // immediately above its inverse).
    static LetterOrder interleaved(std::size_t generators);

    // Interleaved order over the given generator sequence (greatest first).
    static LetterOrder interleaved(std::span<std::size_t const> generators);

    [[nodiscard]] std::size_t generators() const noexcept {
      return _rank.size() / 2;
    }

    // Higher rank is greater.
    [[nodiscard]] std::size_t rank(Letter l) const {
      return _rank[l.code()];
    }

    [[nodiscard]] std::vector<Letter> const& descending() const noexcept {
      return _descending;
    }

    [[nodiscard]] std::strong_ordering compare(Letter a, Letter b) const {
      return rank(a) <=> rank(b);
    }

    bool operator==(LetterOrder const& that) const {
      return _descending == that._descending;
    }

   private:
    std::vector<Letter>      _descending;
    std::vector<std::size_t> _rank;
  };

  // Length first, then letterwise by rank at the first difference.
  std::strong_ordering compare_shortlex(LetterOrder const&      order,
                                        std::span<Letter const> w1,
                                        std::span<Letter const> w2);

  struct OrientedPair {
    Word lhs;
    Word rhs;

    bool operator==(OrientedPair const&) const = default;
  };

  // Greater word on the left; std::nullopt iff u == v.
  std::optional<OrientedPair> orient(LetterOrder const&      order,
                                     std::span<Letter const> u,
                                     std::span<Letter const> v);

  // Accepts "a > a^-1 > b > b^-1" listing every signed letter once, or the
  // shorthand "a > b > c" listing each generator once, which expands to the
  // interleaved order.  An optional leading "order:" is ignored.
  LetterOrder parse_order(std::string_view text, Alphabet const& alphabet);
  std::string format_order(LetterOrder const& order, Alphabet const& alphabet);

}  // namespace rws

#endif  // RWS_ORDERING_HPP_
