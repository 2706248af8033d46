// Copyright 2026 The mss Authors
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

#ifndef MSS_TESTS_SUPPORT_FIXTURES_HPP_
#define MSS_TESTS_SUPPORT_FIXTURES_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <unordered_set>
#include <vector>

#include "mss/board.hpp"
#include "mss/perm.hpp"

namespace mss::testing {

// Modular-magic board [7,2].
inline constexpr const char* kModularMagicBoard =
    "027315648135864207846720153351648072468207531"
    "270153486684072315702531864513486720";

// One board from each of the two modular-magic orbits under the full group.
inline constexpr const char* kSmallOrbitBoard =
    "180756423234801567675342018756423180801567234"
    "342018675423180756567234801018675342";
inline constexpr const char* kLargeOrbitBoard =
    "180756423234801567675342018846513270702468135"
    "351027684513270846468135702027684351";

// Semi-magic board [7,1], which carries the standard gnomon.
inline constexpr const char* kSemiMagicBoard =
    "048723561561048723723561048804156372156372804"
    "372804156480237615615480237237615480";

inline Board board_of(const char* text) { return parse_board(text); }

inline Block block_of(std::initializer_list<std::initializer_list<int>> rows) {
  Block b;
  int r = 0;
  for (const auto& row : rows) {
    int c = 0;
    for (int x : row) b.entries[r][c++] = static_cast<Digit>(x);
    ++r;
  }
  return b;
}

inline Board random_board(std::mt19937_64& rng) {
  Board b;
  std::uniform_int_distribution<int> digit(0, 8);
  for (int k = 0; k < kCells; ++k) b[k] = static_cast<Digit>(digit(rng));
  return b;
}

inline Symmetry random_symmetry(std::mt19937_64& rng) {
  CellPermutation::Images cells;
  DigitPermutation::Images digits;
  std::iota(cells.begin(), cells.end(), std::uint8_t{0});
  std::iota(digits.begin(), digits.end(), Digit{0});
  std::shuffle(cells.begin(), cells.end(), rng);
  std::shuffle(digits.begin(), digits.end(), rng);
  return {CellPermutation::from_images(cells), DigitPermutation::from_images(digits)};
}

template <class T>
const T& pick(const std::vector<T>& xs, std::mt19937_64& rng) {
  return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
}

// Orbit of `start` under `gens` by plain breadth-first search over boards.
// Independent of PermGroup; used as an oracle for orbit sizes.
inline std::unordered_set<Board> board_orbit(const Board& start, const std::vector<Symmetry>& gens) {
  std::unordered_set<Board> seen{start};
  std::vector<Board> frontier{start};
  while (!frontier.empty()) {
    std::vector<Board> next;
    for (const Board& b : frontier) {
      for (const Symmetry& g : gens) {
        Board img = act(g, b);
        if (seen.insert(img).second) next.push_back(img);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace mss::testing

#endif  // MSS_TESTS_SUPPORT_FIXTURES_HPP_
