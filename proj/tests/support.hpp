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

// Shared helpers for the test binaries.

#ifndef RWS_TESTS_SUPPORT_HPP_
#define RWS_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "rws/core.hpp"
#include "rws/io.hpp"
#include "rws/ordering.hpp"
#include "rws/raag.hpp"
#include "rws/rewriting.hpp"

namespace rws::test {

  inline std::filesystem::path data_path(std::string const& name) {
    return std::filesystem::path(RWS_TEST_DATA) / name;
  }

  inline std::filesystem::path golden_path(std::string const& name) {
    return std::filesystem::path(RWS_TEST_GOLDEN) / name;
  }

  inline Alphabet abc(std::size_t n = 3) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
      names.emplace_back(1, static_cast<char>('a' + i));
    }
    return Alphabet(std::move(names));
  }

  inline Word W(Alphabet const& a, std::string_view text) {
    return parse_word(text, a);
  }

  inline RewritingSystem b3_system() {
    return parse_system(read_file(data_path("b3.rws")));
  }

  inline Word random_word(std::mt19937_64& rng,
                          std::size_t      generators,
                          std::size_t      length,
                          bool             positive) {
    std::uniform_int_distribution<std::size_t> gen(0, generators - 1);
    std::bernoulli_distribution                neg(0.5);
    Word                                       w;
    for (std::size_t i = 0; i < length; ++i) {
      w.emplace_back(gen(rng), !positive && neg(rng) ? -1 : 1);
    }
    return w;
  }

  // The rules of a system read as relations.
  inline Presentation as_presentation(RewritingSystem const& rs) {
    Presentation p{rs.alphabet(), {}, PresentationKind::kMonoid, true};
    for (auto const& r : rs.rules()) {
      p.relations.push_back({r.lhs(), r.rhs()});
    }
    return p;
  }

  // Vertices a, b, ...; each possible edge kept with probability 1/2.
  inline DefiningGraph random_graph(std::mt19937_64& rng, std::size_t n) {
    std::bernoulli_distribution                      keep(0.5);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (keep(rng)) {
          edges.emplace_back(i, j);
        }
      }
    }
    return DefiningGraph(abc(n), std::move(edges));
  }

  // Generators in random order, each next to its inverse (either above it),
  // so that the four signed rules of every edge point the same way.
  inline LetterOrder random_paired_order(std::mt19937_64& rng,
                                         std::size_t      generators) {
    std::vector<std::size_t> gens(generators);
    for (std::size_t i = 0; i < generators; ++i) {
      gens[i] = i;
    }
    std::shuffle(gens.begin(), gens.end(), rng);
    std::bernoulli_distribution flip(0.5);
    std::vector<Letter>         desc;
    for (auto g : gens) {
      Letter x(g, 1);
      if (flip(rng)) {
        desc.push_back(x.inverse());
        desc.push_back(x);
      } else {
        desc.push_back(x);
        desc.push_back(x.inverse());
      }
    }
    return LetterOrder(std::move(desc));
  }

}  // namespace rws::test

#endif  // RWS_TESTS_SUPPORT_HPP_
