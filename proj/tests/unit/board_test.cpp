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

#include "mss/board.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "mss/enumerate.hpp"
#include "mss/errors.hpp"
#include "support/fixtures.hpp"

namespace mss {
namespace {

using testing::block_of;
using testing::board_of;
using testing::kModularMagicBoard;
using testing::kSemiMagicBoard;
using testing::kSmallOrbitBoard;

TEST(ParseBoard, RowMajorString) {
  Board b = board_of(kModularMagicBoard);
  EXPECT_EQ(b.at(0, 0), 0);
  EXPECT_EQ(b.at(0, 2), 7);
  EXPECT_EQ(b.at(8, 8), 0);
}

TEST(ParseBoard, NineLinesWithWhitespace) {
  std::string grid;
  for (int r = 0; r < 9; ++r) {
    grid += std::string(kModularMagicBoard).substr(9 * r, 9) + "\n";
  }
  EXPECT_EQ(parse_board(grid), board_of(kModularMagicBoard));
}

TEST(ParseBoard, AllZeros) {
  Board b = parse_board(std::string(81, '0'));
  EXPECT_EQ(b, Board{});
  EXPECT_FALSE(is_sudoku(b));
}

TEST(ParseBoard, WrongLengthIsFormatError) {
  EXPECT_THROW(parse_board(std::string(80, '0')), FormatError);
  EXPECT_THROW(parse_board(std::string(82, '0')), FormatError);
}

TEST(ParseBoard, BadCharacterIsDigitError) {
  std::string text(81, '0');
  text[40] = '9';
  EXPECT_THROW(parse_board(text), DigitError);
  text[40] = 'x';
  EXPECT_THROW(parse_board(text), DigitError);
}

TEST(FormatBoard, RoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Board b = testing::random_board(rng);
    EXPECT_EQ(parse_board(format_board(b)), b);
    EXPECT_EQ(parse_board(format_board_grid(b)), b);
  }
}

TEST(Block, Examples) {
  EXPECT_EQ(block(board_of(kModularMagicBoard), 0, 0), block_of({{0, 2, 7}, {1, 3, 5}, {8, 4, 6}}));
  EXPECT_EQ(block(board_of(kSemiMagicBoard), 0, 0), block_of({{0, 4, 8}, {5, 6, 1}, {7, 2, 3}}));
  EXPECT_EQ(block(Board{}, 2, 1), Block{});
}

TEST(Block, SetBlockInvertsBlock) {
  Board b = board_of(kSemiMagicBoard);
  Board c;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) set_block(c, i, j, block(b, i, j));
  }
  EXPECT_EQ(b, c);
}

TEST(Predicates, Sudoku) {
  EXPECT_TRUE(is_sudoku(board_of(kModularMagicBoard)));
  EXPECT_TRUE(is_sudoku(board_of(kSemiMagicBoard)));
  EXPECT_FALSE(is_sudoku(Board{}));
  Board b = board_of(kModularMagicBoard);
  std::swap(b[0], b[1]);
  EXPECT_FALSE(is_sudoku(b));
}

TEST(Predicates, MagicMod9Block) {
  EXPECT_TRUE(is_magic_mod9_block(block_of({{0, 2, 7}, {1, 3, 5}, {8, 4, 6}})));
  EXPECT_FALSE(is_magic_mod9_block(block_of({{0, 1, 2}, {3, 4, 5}, {6, 7, 8}})));
  EXPECT_FALSE(is_magic_mod9_block(block_of({{0, 0, 7}, {1, 3, 5}, {8, 4, 6}})));
}

TEST(Predicates, ModularMagic) {
  Board b = board_of(kModularMagicBoard);
  EXPECT_TRUE(is_modular_magic(b));
  Board swapped = b;
  for (int c = 0; c < 9; ++c) std::swap(swapped[c], swapped[9 + c]);
  EXPECT_TRUE(is_sudoku(swapped));
  EXPECT_FALSE(is_modular_magic(swapped));
  EXPECT_FALSE(is_modular_magic(board_of(kSemiMagicBoard)));
}

TEST(Predicates, SemiMagicBlock) {
  Block k = block_of({{0, 4, 8}, {5, 6, 1}, {7, 2, 3}});
  EXPECT_TRUE(is_semi_magic_block(k));
  EXPECT_FALSE(is_semi_magic_block(block_of({{0, 2, 7}, {1, 3, 5}, {8, 4, 6}})));
  std::swap(k.entries[0][0], k.entries[0][1]);
  EXPECT_FALSE(is_semi_magic_block(k));
}

TEST(Predicates, SemiMagic) {
  EXPECT_TRUE(is_semi_magic(board_of(kSemiMagicBoard)));
  EXPECT_FALSE(is_semi_magic(board_of(kModularMagicBoard)));
  EXPECT_FALSE(is_semi_magic(Board{}));
}

TEST(OffDiagonalSet, Examples) {
  EXPECT_EQ(off_diagonal_set(block(board_of(kSmallOrbitBoard), 0, 0)),
            (std::array<Digit, 2>{1, 5}));
  EXPECT_EQ(off_diagonal_set(block_of({{0, 2, 7}, {1, 3, 5}, {8, 4, 6}})),
            (std::array<Digit, 2>{7, 8}));
  EXPECT_THROW(off_diagonal_set(block_of({{0, 1, 2}, {3, 4, 5}, {6, 7, 8}})), StructureError);
}

// Every magic-mod-9 block has exactly one mini-diagonal drawn from {0,3,6}.
TEST(OffDiagonalSet, ExactlyOneDiagonalFromMultiplesOfThree) {
  std::array<Digit, 9> d{0, 1, 2, 3, 4, 5, 6, 7, 8};
  int magic = 0;
  do {
    Block b;
    for (int k = 0; k < 9; ++k) b.entries[k / 3][k % 3] = d[k];
    if (!is_magic_mod9_block(b)) continue;
    ++magic;
    auto mult3 = [](Digit x) { return x % 3 == 0; };
    bool main = mult3(b.at(0, 0)) && mult3(b.at(1, 1)) && mult3(b.at(2, 2));
    bool anti = mult3(b.at(0, 2)) && mult3(b.at(1, 1)) && mult3(b.at(2, 0));
    EXPECT_NE(main, anti);
    EXPECT_NO_THROW(off_diagonal_set(b));
  } while (std::next_permutation(d.begin(), d.end()));
  EXPECT_GT(magic, 0);
}

// Mini-row sets of a semi-magic block are one of the two triple systems.
TEST(SemiMagicBlocks, RowAndColumnSetsAreTheTwoTripleSystems) {
  using Triple = std::array<Digit, 3>;
  const std::set<Triple> a = {{0, 4, 8}, {1, 5, 6}, {2, 3, 7}};
  const std::set<Triple> b = {{0, 5, 7}, {2, 4, 6}, {1, 3, 8}};
  for (const Block& k : semi_magic_blocks()) {
    std::set<Triple> rows, cols;
    for (int i = 0; i < 3; ++i) {
      Triple r{k.at(i, 0), k.at(i, 1), k.at(i, 2)};
      Triple c{k.at(0, i), k.at(1, i), k.at(2, i)};
      std::sort(r.begin(), r.end());
      std::sort(c.begin(), c.end());
      rows.insert(r);
      cols.insert(c);
    }
    EXPECT_TRUE((rows == a && cols == b) || (rows == b && cols == a));
  }
}

TEST(Pack, ZeroBoard) {
  PackedBoard p = pack(Board{});
  EXPECT_TRUE(std::all_of(p.begin(), p.end(), [](std::uint8_t x) { return x == 0; }));
}

TEST(Pack, NibbleLayout) {
  Board b;
  b[0] = 3;
  b[1] = 5;
  b[80] = 8;
  PackedBoard p = pack(b);
  EXPECT_EQ(p[0], 0x53);
  EXPECT_EQ(p[40], 0x08);
}

TEST(Pack, RoundTrips) {
  EXPECT_EQ(unpack(pack(board_of(kModularMagicBoard))), board_of(kModularMagicBoard));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    Board b = testing::random_board(rng);
    PackedBoard p = pack(b);
    EXPECT_EQ(unpack(p), b);
    EXPECT_EQ(pack(unpack(p)), p);
  }
}

TEST(Pack, BadNibbleIsFormatError) {
  PackedBoard p{};
  p[3] = 0x90;
  EXPECT_THROW(unpack(p), FormatError);
  PackedBoard pad{};
  pad[40] = 0x10;
  EXPECT_THROW(unpack(pad), FormatError);
}

TEST(BoardHash, EqualBoardsHashEqual) {
  Board a = board_of(kSemiMagicBoard), b = board_of(kSemiMagicBoard);
  EXPECT_EQ(std::hash<Board>{}(a), std::hash<Board>{}(b));
}

}  // namespace
}  // namespace mss
