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

#include "mss/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <cstring>
#include <map>
#include <numeric>
#include <string>

#include "mss/errors.hpp"

namespace mss {

namespace {

constexpr unsigned kAllDigits = (1u << kDigits) - 1;

// Row-major backtracking over cells. A cell that completes a mini-row,
// mini-column or (modular-magic only) mini-diagonal has its value forced by
// the line condition, so only the first two cells of each mini-row in the
// top two rows of a band are real branch points.
class CellSearch {
 public:
  CellSearch(Variant v, const BoardVisitor& visit) : variant_(v), visit_(visit) {}

  void pin(const PartialBoard& p) {
    board_ = p.board;
    fixed_ = p.fixed;
  }

  // Marks cells [0, upto) of board_ as already placed.
  bool seed_prefix(int upto) {
    for (int k = 0; k < upto; ++k) {
      Digit d = board_[k];
      unsigned bit = 1u << d;
      int r = row_of(k), c = col_of(k), b = box_of(r, c);
      if ((rows_[r] | cols_[c] | boxes_[b]) & bit) return false;
      rows_[r] |= bit;
      cols_[c] |= bit;
      boxes_[b] |= bit;
    }
    return true;
  }

  std::uint64_t run(int from, int stop_at = kCells) {
    stop_at_ = stop_at;
    count_ = 0;
    search(from);
    return count_;
  }

 private:
  static int box_of(int r, int c) { return 3 * (r / 3) + c / 3; }

  // The value the line through a and b forces on its third cell, or -1 if
  // none exists.
  int third(int a, int b) const {
    if (variant_ == Variant::kSemiMagic) {
      int v = 12 - a - b;
      return (v >= 0 && v < kDigits) ? v : -1;
    }
    return (18 - a - b) % 9;
  }

  static bool merge_forced(int& forced, int v) {
    if (v < 0) return false;
    if (forced >= 0 && forced != v) return false;
    forced = v;
    return true;
  }

  void place_and_recurse(int k, int r, int c, int b, int d) {
    unsigned bit = 1u << d;
    board_[k] = static_cast<Digit>(d);
    rows_[r] |= bit;
    cols_[c] |= bit;
    boxes_[b] |= bit;
    search(k + 1);
    rows_[r] &= ~bit;
    cols_[c] &= ~bit;
    boxes_[b] &= ~bit;
  }

  void search(int k) {
    if (k == stop_at_) {
      ++count_;
      visit_(board_);
      return;
    }
    const int r = row_of(k), c = col_of(k), b = box_of(r, c);
    const int br = r % 3, bc = c % 3;
    const unsigned open = kAllDigits & ~(rows_[r] | cols_[c] | boxes_[b]);
    if (open == 0) return;

    int forced = -1;
    if (bc == 2 && !merge_forced(forced, third(board_.at(r, c - 1), board_.at(r, c - 2)))) {
      return;
    }
    if (br == 2 && !merge_forced(forced, third(board_.at(r - 1, c), board_.at(r - 2, c)))) {
      return;
    }
    if (variant_ == Variant::kModularMagic && br == 2) {
      if (bc == 0 &&
          !merge_forced(forced, third(board_.at(r - 1, c + 1), board_.at(r - 2, c + 2)))) {
        return;
      }
      if (bc == 2 &&
          !merge_forced(forced, third(board_.at(r - 1, c - 1), board_.at(r - 2, c - 2)))) {
        return;
      }
    }

    if (fixed_[k]) {
      int d = board_[k];
      if (forced >= 0 && d != forced) return;
      if (!(open & (1u << d))) return;
      place_and_recurse(k, r, c, b, d);
      return;
    }
    if (forced >= 0) {
      if (open & (1u << forced)) place_and_recurse(k, r, c, b, forced);
      return;
    }
    for (unsigned m = open; m != 0; m &= m - 1) {
      place_and_recurse(k, r, c, b, std::countr_zero(m));
    }
  }

  Variant variant_;
  const BoardVisitor& visit_;
  Board board_;
  std::bitset<kCells> fixed_;
  std::array<unsigned, kSide> rows_{}, cols_{}, boxes_{};
  int stop_at_ = kCells;
  std::uint64_t count_ = 0;
};

// Modular-magic partitions: every valid assignment of the first row.
constexpr int kMmPrefixCells = kSide;

const std::vector<Board>& mm_prefixes() {
  static const std::vector<Board> prefixes = [] {
    std::vector<Board> out;
    BoardVisitor collect = [&](const Board& b) { out.push_back(b); };
    CellSearch s(Variant::kModularMagic, collect);
    s.run(0, kMmPrefixCells);
    return out;
  }();
  return prefixes;
}

using ColumnMasks = std::array<std::uint16_t, kSide>;

struct Band {
  std::array<Digit, 27> cells;
  ColumnMasks columns;
};

struct BandTable {
  std::vector<Band> bands;  // lexicographic by cells
  std::map<ColumnMasks, std::vector<std::uint32_t>> by_columns;
};

std::uint16_t row_mask(const Block& b, int r) {
  return static_cast<std::uint16_t>((1u << b.entries[r][0]) | (1u << b.entries[r][1]) |
                                    (1u << b.entries[r][2]));
}

// All 72^2 semi-magic bands: three semi-magic blocks whose mini-rows
// partition each row of the band.
const BandTable& band_table() {
  static const BandTable table = [] {
    const std::vector<Block> blocks = semi_magic_blocks();
    BandTable t;
    for (const Block& b0 : blocks) {
      for (const Block& b1 : blocks) {
        bool ok = true;
        for (int r = 0; r < 3 && ok; ++r) ok = (row_mask(b0, r) & row_mask(b1, r)) == 0;
        if (!ok) continue;
        for (const Block& b2 : blocks) {
          bool ok2 = true;
          for (int r = 0; r < 3 && ok2; ++r) {
            ok2 = ((row_mask(b0, r) | row_mask(b1, r)) & row_mask(b2, r)) == 0;
          }
          if (!ok2) continue;
          Band band{};
          const Block* parts[3] = {&b0, &b1, &b2};
          for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < kSide; ++c) {
              Digit d = parts[c / 3]->entries[r][c % 3];
              band.cells[r * kSide + c] = d;
              band.columns[c] |= static_cast<std::uint16_t>(1u << d);
            }
          }
          t.bands.push_back(band);
        }
      }
    }
    std::sort(t.bands.begin(), t.bands.end(),
              [](const Band& a, const Band& b) { return a.cells < b.cells; });
    for (std::uint32_t i = 0; i < t.bands.size(); ++i) {
      t.by_columns[t.bands[i].columns].push_back(i);
    }
    return t;
  }();
  return table;
}

std::uint64_t semi_magic_partition(std::size_t part, const BoardVisitor& visit) {
  const BandTable& t = band_table();
  const Band& top = t.bands[part];
  std::uint64_t count = 0;
  Board board;
  Board::Cells cells{};
  std::copy(top.cells.begin(), top.cells.end(), cells.begin());
  for (const Band& middle : t.bands) {
    bool ok = true;
    ColumnMasks need{};
    for (int c = 0; c < kSide && ok; ++c) {
      ok = (top.columns[c] & middle.columns[c]) == 0;
      need[c] = static_cast<std::uint16_t>(kAllDigits & ~(top.columns[c] | middle.columns[c]));
    }
    if (!ok) continue;
    auto it = t.by_columns.find(need);
    if (it == t.by_columns.end()) continue;
    std::copy(middle.cells.begin(), middle.cells.end(), cells.begin() + 27);
    for (std::uint32_t idx : it->second) {
      const Band& bottom = t.bands[idx];
      std::copy(bottom.cells.begin(), bottom.cells.end(), cells.begin() + 54);
      board = Board(cells);
      ++count;
      visit(board);
    }
  }
  return count;
}

std::uint64_t modular_magic_partition(std::size_t part, const BoardVisitor& visit) {
  const Board& prefix = mm_prefixes()[part];
  CellSearch s(Variant::kModularMagic, visit);
  PartialBoard p{prefix, {}};
  s.pin(p);
  if (!s.seed_prefix(kMmPrefixCells)) return 0;
  return s.run(kMmPrefixCells);
}

}  // namespace

std::string_view variant_name(Variant v) {
  return v == Variant::kModularMagic ? "modular-magic" : "semi-magic";
}

Variant parse_variant(std::string_view text) {
  if (text == "modular-magic" || text == "mm") return Variant::kModularMagic;
  if (text == "semi-magic" || text == "sm") return Variant::kSemiMagic;
  throw DomainError("unknown variant \"" + std::string(text) + "\"");
}

std::vector<Block> semi_magic_blocks() {
  std::vector<Block> out;
  std::array<Digit, kDigits> perm;
  std::iota(perm.begin(), perm.end(), Digit{0});
  do {
    Block b;
    for (int i = 0; i < kDigits; ++i) b.entries[i / 3][i % 3] = perm[i];
    if (is_semi_magic_block(b)) out.push_back(b);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::uint64_t complete(Variant v, const PartialBoard& partial,
                       const BoardVisitor& visit) {
  for (int k = 0; k < kCells; ++k) {
    if (partial.fixed[k] && partial.board[k] >= kDigits) {
      throw DomainError("complete: pinned cell " + std::to_string(k) +
                        " holds an invalid digit");
    }
  }
  CellSearch s(v, visit);
  s.pin(partial);
  return s.run(0);
}

std::uint64_t enumerate_modular_magic(const BoardVisitor& visit) {
  std::uint64_t n = 0;
  for (std::size_t p = 0; p < mm_prefixes().size(); ++p) {
    n += modular_magic_partition(p, visit);
  }
  return n;
}

std::uint64_t enumerate_semi_magic(const BoardVisitor& visit) {
  std::uint64_t n = 0;
  for (std::size_t p = 0; p < band_table().bands.size(); ++p) {
    n += semi_magic_partition(p, visit);
  }
  return n;
}

std::uint64_t enumerate(Variant v, const BoardVisitor& visit) {
  return v == Variant::kModularMagic ? enumerate_modular_magic(visit)
                                     : enumerate_semi_magic(visit);
}

std::size_t partition_count(Variant v) {
  return v == Variant::kModularMagic ? mm_prefixes().size() : band_table().bands.size();
}

std::uint64_t enumerate_partition(Variant v, std::size_t part,
                                  const BoardVisitor& visit) {
  if (part >= partition_count(v)) {
    throw DomainError("enumerate_partition: partition index out of range");
  }
  return v == Variant::kModularMagic ? modular_magic_partition(part, visit)
                                     : semi_magic_partition(part, visit);
}

PartialBoard standard_gnomon() {
  static constexpr std::string_view kStandard71 =
      "048723561"
      "561048723"
      "723561048"
      "804156372"
      "156372804"
      "372804156"
      "480237615"
      "615480237"
      "237615480";
  PartialBoard p;
  p.board = parse_board(kStandard71);
  for (int k = 0; k < kCells; ++k) {
    if (row_of(k) < 3 || col_of(k) < 3) {
      p.fixed.set(k);
    } else {
      p.board[k] = 0;
    }
  }
  return p;
}

std::vector<Board> complete_standard_gnomon() {
  std::vector<Board> out;
  complete(Variant::kSemiMagic, standard_gnomon(),
           [&](const Board& b) { out.push_back(b); });
  return out;
}

unsigned default_threads() {
  if (const char* env = std::getenv("MSS_THREADS")) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0 && n <= 1024) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace mss
