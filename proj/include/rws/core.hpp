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

// Alphabets, signed letters, words and presentations.
//
// A word is a plain vector of letters; a letter packs a generator index and a
// sign into one integer ("code") so that words compare and hash cheaply.  The
// code of x_i is 2i and the code of x_i^-1 is 2i + 1, which gives a dense
// numbering of the doubled alphabet X u X^-1 used by orders and indices.

#ifndef RWS_CORE_HPP_
#define RWS_CORE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rws {

  class Letter {
   public:
    constexpr Letter() = default;

    constexpr Letter(std::size_t generator, int sign)
        : _code(static_cast<std::uint32_t>(2 * generator + (sign < 0 ? 1 : 0))) {}

    static constexpr Letter from_code(std::size_t code) {
      Letter l;
      l._code = static_cast<std::uint32_t>(code);
      return l;
    }

    [[nodiscard]] constexpr std::size_t generator() const noexcept {
      return _code >> 1;
    }

    [[nodiscard]] constexpr int sign() const noexcept {
      return (_code & 1U) ? -1 : 1;
    }

    [[nodiscard]] constexpr bool positive() const noexcept {
      return (_code & 1U) == 0;
    }

    [[nodiscard]] constexpr Letter inverse() const noexcept {
      return from_code(_code ^ 1U);
    }

    [[nodiscard]] constexpr std::size_t code() const noexcept {
      return _code;
    }

    constexpr auto operator<=>(Letter const&) const = default;

   private:
    std::uint32_t _code = 0;
  };

  using Word = std::vector<Letter>;

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept;
  };

  class Alphabet {
   public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    [[nodiscard]] std::size_t size() const noexcept {
      return _names.size();
    }

    [[nodiscard]] bool empty() const noexcept {
      return _names.empty();
    }

    // Number of signed letters, i.e. 2 * size().
    [[nodiscard]] std::size_t letter_codes() const noexcept {
      return 2 * _names.size();
    }

    [[nodiscard]] std::string const& name(std::size_t generator) const;
    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    // Throws Error(kUnknownGenerator) if absent.
    [[nodiscard]] std::size_t index(std::string_view name) const;
    [[nodiscard]] bool contains(std::string_view name) const;

    bool operator==(Alphabet const& that) const {
      return _names == that._names;
    }

   private:
    std::vector<std::string>                     _names;
    std::unordered_map<std::string, std::size_t> _index;
  };

  struct Relation {
    Word left;
    Word right;

    bool operator==(Relation const&) const = default;
  };

  enum class PresentationKind { kMonoid, kGroup };

  struct Presentation {
    Alphabet              alphabet;
    std::vector<Relation> relations;
    PresentationKind      kind = PresentationKind::kMonoid;
    // A monoid presentation over X u X^-1, as produced by group_to_monoid.
    bool inverses_allowed = false;

    // Throws if a relation uses a generator outside the alphabet, or an
    // inverse letter in a plain monoid presentation.
    void validate() const;
  };

  Word free_reduce(std::span<Letter const> w);
  bool is_positive(std::span<Letter const> w) noexcept;
  Word inverse(std::span<Letter const> w);
  Word concat(std::span<Letter const> a, std::span<Letter const> b);
  Word concat(std::span<Letter const> a,
              std::span<Letter const> b,
              std::span<Letter const> c);

  // True iff `needle` occurs in `hay` starting at `pos`.
  bool occurs_at(std::span<Letter const> hay,
                 std::span<Letter const> needle,
                 std::size_t             pos) noexcept;

  // Appends x x^-1 = 1 and x^-1 x = 1 for every generator x; the original
  // relations keep their positions at the front.
  Presentation group_to_monoid(Presentation const& p);

  Word        parse_word(std::string_view text, Alphabet const& alphabet);
  std::string format_word(std::span<Letter const> w, Alphabet const& alphabet);
  std::string format_letter(Letter l, Alphabet const& alphabet);

}  // namespace rws

#endif  // RWS_CORE_HPP_
