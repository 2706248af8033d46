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
//
// 9x9 boards over the digits 0..8, their 3x3 blocks, and the variant
// predicates (plain Sudoku, modular-magic, semi-magic).
//
// Coordinates are 0-based: row r and column c run top-to-bottom and
// left-to-right, cell k = 9 * r + c. Block (I, J) covers rows 3I..3I+2 and
// columns 3J..3J+2. Boards carry no validity invariant beyond "81 digits in
// 0..8"; the predicates below are the only validity checks.

#ifndef MSS_BOARD_HPP_
#define MSS_BOARD_HPP_

#include <array>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace mss {

using Digit = std::uint8_t;

inline constexpr int kDigits = 9;
inline constexpr int kSide = 9;
inline constexpr int kCells = 81;
inline constexpr int kPackedBytes = 41;

constexpr int cell_index(int row, int col) { return row * kSide + col; }
constexpr int row_of(int cell) { return cell / kSide; }
constexpr int col_of(int cell) { return cell % kSide; }

class Board {
 public:
  using Cells = std::array<Digit, kCells>;

  Board() = default;
  explicit Board(const Cells& cells) : cells_(cells) {}

  Digit operator[](int cell) const { return cells_[cell]; }
  Digit& operator[](int cell) { return cells_[cell]; }

  Digit at(int row, int col) const { return cells_[cell_index(row, col)]; }
  void set(int row, int col, Digit d) { cells_[cell_index(row, col)] = d; }

  const Cells& cells() const { return cells_; }

  friend auto operator<=>(const Board&, const Board&) = default;

 private:
  Cells cells_{};
};

struct Block {
  std::array<std::array<Digit, 3>, 3> entries{};

  Digit at(int row, int col) const { return entries[row][col]; }
  Digit& at(int row, int col) { return entries[row][col]; }

  friend auto operator<=>(const Block&, const Block&) = default;
};

Block block(const Board& board, int band, int pillar);
void set_block(Board& board, int band, int pillar, const Block& b);

bool is_sudoku(const Board& board);

// Distinct entries, and every mini-row, mini-column and both mini-diagonals
// sum to 0 mod 9.
bool is_magic_mod9_block(const Block& b);
bool is_modular_magic(const Board& board);

// Distinct entries, and every mini-row and mini-column sums to 12.
bool is_semi_magic_block(const Block& b);
bool is_semi_magic(const Board& board);

// Corner entries (ascending) of the mini-diagonal of a magic-mod-9 block
// whose entries are not all from {0, 3, 6}. Throws StructureError unless
// exactly one mini-diagonal is drawn from {0, 3, 6}.
std::array<Digit, 2> off_diagonal_set(const Block& b);

// Nibble packing: cell k lives in the low nibble of byte k/2 when k is even
// and the high nibble when k is odd. The trailing nibble is zero.
using PackedBoard = std::array<std::uint8_t, kPackedBytes>;

PackedBoard pack(const Board& board);
// Throws FormatError if a cell nibble exceeds 8 or the pad nibble is set.
Board unpack(const PackedBoard& packed);

// Accepts 81 digits '0'..'8' with arbitrary interleaved whitespace (so both
// the one-line and the 9x9 grid forms parse).
Board parse_board(std::string_view text);

// 81 characters, row-major, no separators.
std::string format_board(const Board& board);
// Nine lines of nine digits with a space between pillars and a blank line
// between bands.
std::string format_board_grid(const Board& board);

struct BoardHash {
  std::size_t operator()(const Board& board) const noexcept;
};

}  // namespace mss

template <>
struct std::hash<mss::Board> : mss::BoardHash {};

#endif  // MSS_BOARD_HPP_
