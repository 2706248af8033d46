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

#include "mss/keedwell.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "mss/catalog.hpp"
#include "mss/errors.hpp"
#include "mss/nests.hpp"
#include "support/fixtures.hpp"

namespace mss {
namespace {

using testing::board_of;

NestLabel sm(int a, int b) {
  return {Variant::kSemiMagic, static_cast<Digit>(a), static_cast<Digit>(b)};
}

// True if every block is a cyclic shift of the mini-rows and mini-columns
// of block (0,0); written against the definition, cell by cell.
bool keedwell_brute(const Board& b) {
  for (int bi = 0; bi < 3; ++bi) {
    for (int bj = 0; bj < 3; ++bj) {
      bool any = false;
      for (int c = 0; c < 3 && !any; ++c) {
        for (int d = 0; d < 3 && !any; ++d) {
          bool all = true;
          for (int r = 0; r < 3 && all; ++r) {
            for (int s = 0; s < 3 && all; ++s) {
              all = b.at(3 * bi + r, 3 * bj + s) == b.at((r + 3 - c) % 3, (s + 3 - d) % 3);
            }
          }
          any = all;
        }
      }
      if (!any) return false;
    }
  }
  return true;
}

TEST(BlockMaps, AlphaAndBeta) {
  const Block k = testing::block_of({{0, 4, 8}, {5, 6, 1}, {7, 2, 3}});
  EXPECT_EQ(apply_alpha(k, 1), testing::block_of({{7, 2, 3}, {0, 4, 8}, {5, 6, 1}}));
  EXPECT_EQ(apply_beta(k, 1), testing::block_of({{8, 0, 4}, {1, 5, 6}, {3, 7, 2}}));
  EXPECT_EQ(apply_alpha(k, 3), k);
  EXPECT_EQ(apply_beta(apply_beta(k, 2), 1), k);
  EXPECT_EQ(apply_alpha(apply_beta(k, 1), 1), apply_beta(apply_alpha(k, 1), 1));
  EXPECT_EQ(swap_block_rows(k, 0, 2), testing::block_of({{7, 2, 3}, {5, 6, 1}, {0, 4, 8}}));
  EXPECT_EQ(swap_block_cols(k, 0, 1), testing::block_of({{4, 0, 8}, {6, 5, 1}, {2, 7, 3}}));
}

TEST(BlockMaps, TranspositionRelations) {
  const std::array<std::pair<int, int>, 3> pairs = {{{0, 1}, {0, 2}, {1, 2}}};
  for (const Block& k : semi_magic_blocks()) {
    for (auto [i, j] : pairs) {
      // tau alpha = alpha tau and tau beta = beta^2 tau for a column swap.
      EXPECT_EQ(swap_block_cols(apply_alpha(k, 1), i, j), apply_alpha(swap_block_cols(k, i, j), 1));
      EXPECT_EQ(swap_block_cols(apply_beta(k, 1), i, j), apply_beta(swap_block_cols(k, i, j), 2));
      EXPECT_EQ(swap_block_rows(apply_beta(k, 1), i, j), apply_beta(swap_block_rows(k, i, j), 1));
      EXPECT_EQ(swap_block_rows(apply_alpha(k, 1), i, j), apply_alpha(swap_block_rows(k, i, j), 2));
    }
  }
}

TEST(Decompose, SevenOneMatrices) {
  auto dec = keedwell_decompose(board_of(testing::kSemiMagicBoard));
  ASSERT_TRUE(dec.has_value());
  EXPECT_EQ(dec->k, testing::block_of({{0, 4, 8}, {5, 6, 1}, {7, 2, 3}}));
  EXPECT_EQ(dec->exponents.c, (ExponentMatrix{{{0, 1, 2}, {0, 2, 1}, {0, 1, 2}}}));
  EXPECT_EQ(dec->exponents.d, (ExponentMatrix{{{0, 0, 0}, {1, 1, 1}, {2, 2, 2}}}));
}

TEST(Decompose, OtherStandardBoards) {
  auto a = keedwell_decompose(representative(sm(7, 8)));
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a->exponents.c, (ExponentMatrix{{{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}}));
  EXPECT_EQ(a->exponents.d, (ExponentMatrix{{{0, 0, 0}, {1, 1, 1}, {2, 2, 2}}}));
  auto b = keedwell_decompose(representative(sm(7, 6)));
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(b->exponents.c, (ExponentMatrix{{{0, 1, 2}, {0, 2, 1}, {0, 1, 2}}}));
  EXPECT_EQ(b->exponents.d, (ExponentMatrix{{{0, 0, 0}, {1, 1, 2}, {2, 2, 1}}}));
}

TEST(Decompose, ReassemblesTheBoard) {
  for (const NestLabel& l : nest_labels(Variant::kSemiMagic)) {
    const Board b = representative(l);
    auto dec = keedwell_decompose(b);
    ASSERT_TRUE(dec.has_value()) << l.to_string();
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        Block expect = apply_alpha(apply_beta(dec->k, dec->exponents.d[i][j]), dec->exponents.c[i][j]);
        EXPECT_EQ(block(b, i, j), expect);
      }
    }
  }
}

TEST(QuasiLinear, Examples) {
  EXPECT_TRUE(is_quasi_linear(ExponentMatrix{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}}));
  EXPECT_TRUE(is_quasi_linear(ExponentMatrix{}));
  EXPECT_FALSE(is_quasi_linear(ExponentMatrix{{{0, 1, 2}, {0, 2, 1}, {0, 1, 2}}}));
  EXPECT_FALSE(is_quasi_linear(ExponentMatrix{{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}}));
}

TEST(LinearityDegree, StandardBoards) {
  std::map<int, std::vector<std::string>> by_degree;
  for (const NestLabel& l : nest_labels(Variant::kSemiMagic)) {
    auto deg = linearity_degree(representative(l));
    ASSERT_TRUE(deg.has_value()) << l.to_string();
    by_degree[*deg].push_back(l.to_string());
  }
  EXPECT_EQ(by_degree[2], (std::vector<std::string>{"[7,8]"}));
  EXPECT_EQ(by_degree[1],
            (std::vector<std::string>{"[2,4]", "[2,8]", "[5,1]", "[5,8]", "[7,1]", "[7,4]"}));
  EXPECT_EQ(by_degree[0].size(), 9u);
}

TEST(LinearityDegree, NonKeedwellAndInvalid) {
  Board b = act(Symmetry::of_cells(swap_rows_cells(0, 1)), board_of(testing::kSemiMagicBoard));
  EXPECT_FALSE(keedwell_brute(b));
  EXPECT_FALSE(keedwell_decompose(b).has_value());
  EXPECT_FALSE(linearity_degree(b).has_value());
  EXPECT_THROW(linearity_degree(Board{}), DomainError);
  EXPECT_THROW(keedwell_decompose(Board{}), DomainError);
}

TEST(Gk, GeneratorsPreserveKeedwell) {
  std::mt19937_64 rng(31);
  const auto gens = g_k_generators();
  Board b = board_of(testing::kSemiMagicBoard);
  for (int i = 0; i < 300; ++i) {
    b = act(testing::pick(gens, rng).symmetry, b);
    ASSERT_TRUE(is_sudoku(b));
    ASSERT_TRUE(keedwell_brute(b));
    ASSERT_TRUE(keedwell_decompose(b).has_value());
  }
}

int parity(const std::array<int, 3>& p) {
  int inversions = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) inversions += p[i] > p[j];
  }
  return inversions % 2;
}

// Random row/column symmetries: Keedwell survives exactly when the
// within-band permutations share a parity and so do the within-pillar ones.
TEST(Gk, ParityCharacterization) {
  std::mt19937_64 rng(32);
  const Board start = board_of(testing::kSemiMagicBoard);
  int kept = 0, broken = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::array<int, 3> band{0, 1, 2}, pillar{0, 1, 2};
    std::array<std::array<int, 3>, 3> rows, cols;
    std::shuffle(band.begin(), band.end(), rng);
    std::shuffle(pillar.begin(), pillar.end(), rng);
    for (int k = 0; k < 3; ++k) {
      rows[k] = {0, 1, 2};
      cols[k] = {0, 1, 2};
      std::shuffle(rows[k].begin(), rows[k].end(), rng);
      std::shuffle(cols[k].begin(), cols[k].end(), rng);
    }
    const bool flip = rng() % 2;
    CellPermutation cells = CellPermutation::from_coordinate_map([&](int r, int c) {
      int nr = 3 * band[r / 3] + rows[r / 3][r % 3];
      int nc = 3 * pillar[c / 3] + cols[c / 3][c % 3];
      return flip ? std::pair{nc, nr} : std::pair{nr, nc};
    });
    const Board b = act(Symmetry::of_cells(cells), start);
    const bool predicted = parity(rows[0]) == parity(rows[1]) &&
                           parity(rows[1]) == parity(rows[2]) &&
                           parity(cols[0]) == parity(cols[1]) && parity(cols[1]) == parity(cols[2]);
    ASSERT_EQ(keedwell_brute(b), predicted);
    ASSERT_EQ(keedwell_decompose(b).has_value(), predicted);
    (predicted ? kept : broken)++;
  }
  EXPECT_GT(kept, 0);
  EXPECT_GT(broken, 0);
}

}  // namespace
}  // namespace mss
