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

#include <cctype>
#include <string>

#include "mss/errors.hpp"

namespace mss {

namespace {

constexpr unsigned kAllDigits = (1u << kDigits) - 1;

bool is_036(Digit d) { return d % 3 == 0; }

bool block_has_all_digits(const Block& b) {
  unsigned seen = 0;
  for (const auto& row : b.entries) {
    for (Digit d : row) {
      if (d >= kDigits) return false;
      seen |= 1u << d;
    }
  }
  return seen == kAllDigits;
}

}  // namespace

Block block(const Board& board, int band, int pillar) {
  assert(band >= 0 && band < 3 && pillar >= 0 && pillar < 3);
  Block out;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      out.entries[r][c] = board.at(3 * band + r, 3 * pillar + c);
    }
  }
  return out;
}

void set_block(Board& board, int band, int pillar, const Block& b) {
  assert(band >= 0 && band < 3 && pillar >= 0 && pillar < 3);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      board.set(3 * band + r, 3 * pillar + c, b.entries[r][c]);
    }
  }
}

bool is_sudoku(const Board& board) {
  for (int i = 0; i < kSide; ++i) {
    unsigned row = 0, col = 0, box = 0;
    for (int j = 0; j < kSide; ++j) {
      Digit r = board.at(i, j);
      Digit c = board.at(j, i);
      Digit b = board.at(3 * (i / 3) + j / 3, 3 * (i % 3) + j % 3);
      if (r >= kDigits || c >= kDigits || b >= kDigits) return false;
      row |= 1u << r;
      col |= 1u << c;
      box |= 1u << b;
    }
    if (row != kAllDigits || col != kAllDigits || box != kAllDigits) {
      return false;
    }
  }
  return true;
}

bool is_magic_mod9_block(const Block& b) {
  if (!block_has_all_digits(b)) return false;
  const auto& e = b.entries;
  for (int i = 0; i < 3; ++i) {
    if ((e[i][0] + e[i][1] + e[i][2]) % 9 != 0) return false;
    if ((e[0][i] + e[1][i] + e[2][i]) % 9 != 0) return false;
  }
  if ((e[0][0] + e[1][1] + e[2][2]) % 9 != 0) return false;
  if ((e[0][2] + e[1][1] + e[2][0]) % 9 != 0) return false;
  return true;
}

bool is_modular_magic(const Board& board) {
  if (!is_sudoku(board)) return false;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (!is_magic_mod9_block(block(board, i, j))) return false;
    }
  }
  return true;
}

bool is_semi_magic_block(const Block& b) {
  if (!block_has_all_digits(b)) return false;
  const auto& e = b.entries;
  for (int i = 0; i < 3; ++i) {
    if (e[i][0] + e[i][1] + e[i][2] != 12) return false;
    if (e[0][i] + e[1][i] + e[2][i] != 12) return false;
  }
  return true;
}

bool is_semi_magic(const Board& board) {
  if (!is_sudoku(board)) return false;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (!is_semi_magic_block(block(board, i, j))) return false;
    }
  }
  return true;
}

std::array<Digit, 2> off_diagonal_set(const Block& b) {
  if (!is_magic_mod9_block(b)) {
    throw StructureError("off_diagonal_set: block is not magic mod 9");
  }
  const auto& e = b.entries;
  bool main_036 = is_036(e[0][0]) && is_036(e[1][1]) && is_036(e[2][2]);
  bool anti_036 = is_036(e[0][2]) && is_036(e[1][1]) && is_036(e[2][0]);
  if (main_036 == anti_036) {
    throw StructureError(
        "off_diagonal_set: expected exactly one mini-diagonal from {0,3,6}");
  }
  Digit x = main_036 ? e[0][2] : e[0][0];
  Digit y = main_036 ? e[2][0] : e[2][2];
  if (x > y) std::swap(x, y);
  return {x, y};
}

PackedBoard pack(const Board& board) {
  PackedBoard out{};
  for (int k = 0; k < kCells; ++k) {
    auto nibble = static_cast<std::uint8_t>(board[k] & 0x0F);
    out[k / 2] |= (k % 2 == 0) ? nibble : static_cast<std::uint8_t>(nibble << 4);
  }
  return out;
}

Board unpack(const PackedBoard& packed) {
  Board out;
  for (int k = 0; k < kCells; ++k) {
    std::uint8_t byte = packed[k / 2];
    std::uint8_t nibble = (k % 2 == 0) ? (byte & 0x0F) : (byte >> 4);
    if (nibble >= kDigits) {
      throw FormatError("unpack: cell " + std::to_string(k) + " holds nibble " +
                        std::to_string(nibble));
    }
    out[k] = nibble;
  }
  if ((packed[kPackedBytes - 1] >> 4) != 0) {
    throw FormatError("unpack: non-zero pad nibble");
  }
  return out;
}

Board parse_board(std::string_view text) {
  Board out;
  int n = 0;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (n >= kCells) {
      throw FormatError("parse_board: more than 81 cells");
    }
    if (ch < '0' || ch > '8') {
      throw DigitError(std::string("parse_board: invalid digit '") + ch + "'");
    }
    out[n++] = static_cast<Digit>(ch - '0');
  }
  if (n != kCells) {
    throw FormatError("parse_board: expected 81 cells, got " + std::to_string(n));
  }
  return out;
}

std::string format_board(const Board& board) {
  std::string out(kCells, '0');
  for (int k = 0; k < kCells; ++k) out[k] = static_cast<char>('0' + board[k]);
  return out;
}

std::string format_board_grid(const Board& board) {
  std::string out;
  for (int r = 0; r < kSide; ++r) {
    if (r > 0 && r % 3 == 0) out += '\n';
    for (int c = 0; c < kSide; ++c) {
      if (c > 0 && c % 3 == 0) out += ' ';
      out += static_cast<char>('0' + board.at(r, c));
    }
    out += '\n';
  }
  return out;
}

std::size_t BoardHash::operator()(const Board& board) const noexcept {
  // FNV-1a over the cells.
  std::uint64_t h = 1469598103934665603ull;
  for (Digit d : board.cells()) {
    h ^= d;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace mss
