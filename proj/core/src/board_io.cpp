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

#include "mss/board_io.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include "mss/errors.hpp"

namespace mss {

namespace {

void put_u32_le(std::ostream& out, std::uint32_t v) {
  char bytes[4];
  for (int i = 0; i < 4; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(bytes, 4);
}

void write_header(std::ostream& out, std::uint32_t count) {
  out.write(kBinaryMagic, 4);
  out.put(static_cast<char>(kBinaryVersion));
  put_u32_le(out, count);
}

std::uint32_t checked_count(std::size_t n) {
  if (n > std::numeric_limits<std::uint32_t>::max()) {
    throw FormatError("binary board file holds at most 2^32-1 boards");
  }
  return static_cast<std::uint32_t>(n);
}

}  // namespace

void write_text_boards(std::ostream& out, std::span<const Board> boards) {
  for (const Board& b : boards) {
    out << format_board(b) << '\n';
  }
}

std::vector<Board> read_text_boards(std::istream& in) {
  std::vector<Board> out;
  std::string line;
  while (std::getline(in, line)) {
    if (std::all_of(line.begin(), line.end(),
                    [](unsigned char c) { return std::isspace(c); })) {
      continue;
    }
    out.push_back(parse_board(line));
  }
  return out;
}

void write_binary_boards(std::ostream& out, std::span<const Board> boards) {
  write_header(out, checked_count(boards.size()));
  for (const Board& b : boards) {
    PackedBoard p = pack(b);
    out.write(reinterpret_cast<const char*>(p.data()), kPackedBytes);
  }
}

std::vector<Board> read_binary_boards(std::istream& in) {
  char header[kBinaryHeaderBytes];
  if (!in.read(header, kBinaryHeaderBytes)) {
    throw FormatError("binary board file: truncated header");
  }
  if (!std::equal(header, header + 4, kBinaryMagic)) {
    throw FormatError("binary board file: bad magic");
  }
  if (static_cast<std::uint8_t>(header[4]) != kBinaryVersion) {
    throw FormatError("binary board file: unsupported version " +
                      std::to_string(static_cast<std::uint8_t>(header[4])));
  }
  std::uint32_t count = 0;
  for (int i = 0; i < 4; ++i) {
    count |= static_cast<std::uint32_t>(static_cast<std::uint8_t>(header[5 + i]))
             << (8 * i);
  }
  std::vector<Board> out;
  out.reserve(std::min<std::uint32_t>(count, 1u << 20));
  PackedBoard p;
  for (std::uint32_t i = 0; i < count; ++i) {
    if (!in.read(reinterpret_cast<char*>(p.data()), kPackedBytes)) {
      throw FormatError("binary board file: truncated at board " +
                        std::to_string(i));
    }
    out.push_back(unpack(p));
  }
  return out;
}

BinaryBoardWriter::BinaryBoardWriter(std::ostream& out) : out_(out) {
  header_pos_ = out_.tellp();
  if (header_pos_ < 0) {
    throw FormatError("binary board writer needs a seekable stream");
  }
  write_header(out_, 0);
}

void BinaryBoardWriter::add(const Board& board) { add_packed(pack(board)); }

void BinaryBoardWriter::add_packed(const PackedBoard& packed) {
  if (count_ == std::numeric_limits<std::uint32_t>::max()) {
    throw FormatError("binary board file holds at most 2^32-1 boards");
  }
  out_.write(reinterpret_cast<const char*>(packed.data()), kPackedBytes);
  ++count_;
}

void BinaryBoardWriter::finish() {
  if (finished_) return;
  finished_ = true;
  auto end = out_.tellp();
  out_.seekp(header_pos_ + 5);
  put_u32_le(out_, count_);
  out_.seekp(end);
  out_.flush();
}

}  // namespace mss
