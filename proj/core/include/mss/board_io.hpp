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
// Board-set files.
//
// Text: one 81-character row-major board per LF-terminated line.
//
// Binary ("MSSB"): the 4 magic bytes "MSSB", a 1-byte version (1), the board
// count as a 4-byte little-endian integer, then `count` 41-byte packed boards.

#ifndef MSS_BOARD_IO_HPP_
#define MSS_BOARD_IO_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "mss/board.hpp"

namespace mss {

inline constexpr char kBinaryMagic[4] = {'M', 'S', 'S', 'B'};
inline constexpr std::uint8_t kBinaryVersion = 1;
inline constexpr std::size_t kBinaryHeaderBytes = 9;

void write_text_boards(std::ostream& out, std::span<const Board> boards);
// Blank lines are skipped. Throws FormatError/DigitError on bad lines.
std::vector<Board> read_text_boards(std::istream& in);

void write_binary_boards(std::ostream& out, std::span<const Board> boards);
// Throws FormatError on a bad header, truncated payload or bad nibble.
std::vector<Board> read_binary_boards(std::istream& in);

// Streams boards to a seekable binary output; the header count is patched
// when finish() runs.
class BinaryBoardWriter {
 public:
  explicit BinaryBoardWriter(std::ostream& out);
  BinaryBoardWriter(const BinaryBoardWriter&) = delete;
  BinaryBoardWriter& operator=(const BinaryBoardWriter&) = delete;

  void add(const Board& board);
  void add_packed(const PackedBoard& packed);
  void finish();
  std::uint32_t count() const { return count_; }

 private:
  std::ostream& out_;
  std::streamoff header_pos_ = 0;
  std::uint32_t count_ = 0;
  bool finished_ = false;
};

}  // namespace mss

#endif  // MSS_BOARD_IO_HPP_
