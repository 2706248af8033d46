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

#include "mss/nests.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>

#include "mss/catalog.hpp"
#include "mss/errors.hpp"
#include "mss/perm.hpp"

namespace mss {

namespace {

struct FixedCell {
  int cell;
  Digit value;
};

// {0,3,6} skeleton shared by every modular-magic nest representative.
constexpr std::array<FixedCell, 27> kMmSkeleton = {{
    {cell_index(0, 0), 0}, {cell_index(0, 3), 3}, {cell_index(0, 6), 6},
    {cell_index(1, 1), 3}, {cell_index(1, 4), 6}, {cell_index(1, 7), 0},
    {cell_index(2, 2), 6}, {cell_index(2, 5), 0}, {cell_index(2, 8), 3},
    {cell_index(3, 0), 3}, {cell_index(3, 3), 6}, {cell_index(3, 6), 0},
    {cell_index(4, 1), 6}, {cell_index(4, 4), 0}, {cell_index(4, 7), 3},
    {cell_index(5, 2), 0}, {cell_index(5, 5), 3}, {cell_index(5, 8), 6},
    {cell_index(6, 0), 6}, {cell_index(6, 3), 0}, {cell_index(6, 6), 3},
    {cell_index(7, 1), 0}, {cell_index(7, 4), 3}, {cell_index(7, 7), 6},
    {cell_index(8, 2), 3}, {cell_index(8, 5), 6}, {cell_index(8, 8), 0},
}};
constexpr int kAlphaCell = cell_index(0, 2);
constexpr int kBetaCell = cell_index(2, 0);
constexpr int kGammaCellA = cell_index(3, 8);
constexpr int kGammaCellB = cell_index(6, 5);

constexpr int kSmFirstCell = cell_index(6, 5);
constexpr int kSmSecondCell = cell_index(5, 6);

constexpr std::array<std::array<int, 3>, 6> kPerms3 = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

bool in_gnomon(int cell) { return row_of(cell) < 3 || col_of(cell) < 3; }

const Board& standard_board() {
  static const Board b = parse_board(
      "048723561561048723723561048804156372156372804"
      "372804156480237615615480237237615480");
  return b;
}

// For every element g of a group and each probe cell x, stores g^-1(x) in a
// structure-of-arrays layout so that a scan touches one small array per
// probe; most elements are rejected on the first probe.
class OrbitScanner {
 public:
  OrbitScanner(const PermGroup& group, std::vector<FixedCell> probes,
               std::vector<int> extra_cells)
      : group_(group), probes_(std::move(probes)), extra_(std::move(extra_cells)) {
    const std::size_t n = group.order();
    pre_.assign(probes_.size() + extra_.size(), std::vector<std::uint8_t>(n));
    for (std::size_t g = 0; g < n; ++g) {
      CellPermutation inv = group.elements()[g].cell.inverse();
      for (std::size_t p = 0; p < probes_.size(); ++p) {
        pre_[p][g] = static_cast<std::uint8_t>(inv(probes_[p].cell));
      }
      for (std::size_t e = 0; e < extra_.size(); ++e) {
        pre_[probes_.size() + e][g] = static_cast<std::uint8_t>(inv(extra_[e]));
      }
    }
  }

  // Calls accept(g, extra_values) for every element whose image of `board`
  // matches all probes; accept returns whether to keep the match.
  template <class Accept>
  std::vector<Board> matches(const Board& board, Accept accept) const {
    std::vector<Board> out;
    const std::size_t n = group_.order();
    const std::size_t np = probes_.size();
    std::array<Digit, 8> extra_values{};
    for (std::size_t g = 0; g < n; ++g) {
      std::size_t p = 0;
      while (p < np && board[pre_[p][g]] == probes_[p].value) ++p;
      if (p < np) continue;
      for (std::size_t e = 0; e < extra_.size(); ++e) extra_values[e] = board[pre_[np + e][g]];
      if (!accept(extra_values)) continue;
      Board img = act(group_.elements()[g], board);
      if (std::find(out.begin(), out.end(), img) == out.end()) out.push_back(img);
    }
    return out;
  }

 private:
  const PermGroup& group_;
  std::vector<FixedCell> probes_;
  std::vector<int> extra_;
  std::vector<std::vector<std::uint8_t>> pre_;
};

const OrbitScanner& mm_scanner() {
  static const OrbitScanner scanner(
      h_mm_group(), std::vector<FixedCell>(kMmSkeleton.begin(), kMmSkeleton.end()),
      {kAlphaCell, kBetaCell, kGammaCellA, kGammaCellB});
  return scanner;
}

const OrbitScanner& sm_scanner() {
  static const OrbitScanner scanner = [] {
    std::vector<FixedCell> probes;
    const Board& s = standard_board();
    for (int k = 0; k < kCells; ++k) {
      if (in_gnomon(k)) probes.push_back({k, s[k]});
    }
    return OrbitScanner(h_gamma_group(), std::move(probes), {});
  }();
  return scanner;
}

NestLabel mm_label(const Board& b) {
  return {Variant::kModularMagic, b[kAlphaCell], b[kGammaCellA]};
}

NestLabel sm_label(const Board& b) {
  return {Variant::kSemiMagic, b[kSmFirstCell], b[kSmSecondCell]};
}

Board transposed(const Board& b) {
  Board out;
  for (int r = 0; r < kSide; ++r) {
    for (int c = 0; c < kSide; ++c) out.set(c, r, b.at(r, c));
  }
  return out;
}

// Source lines, in order, for the six lines 3..8 of a gnomon-fixing map:
// checks that they form two whole groups of three other than group 0.
bool groups_consistent(const std::array<int, kSide>& lines) {
  for (int g = 1; g < 3; ++g) {
    int group = lines[3 * g] / 3;
    if (group == 0) return false;
    for (int i = 1; i < 3; ++i) {
      if (lines[3 * g + i] / 3 != group) return false;
    }
  }
  return lines[3] / 3 != lines[6] / 3;
}

std::optional<Board> reduce_to_standard(const Board& b) {
  const Board& s = standard_board();
  std::optional<Board> best;
  for (const auto& r0 : kPerms3) {
    for (const auto& c0 : kPerms3) {
      bool ok = true;
      for (int i = 0; i < 3 && ok; ++i) {
        for (int j = 0; j < 3 && ok; ++j) ok = b.at(r0[i], c0[j]) == s.at(i, j);
      }
      if (!ok) continue;
      std::array<int, kDigits> col_of_digit{}, row_of_digit{};
      for (int x = 0; x < kSide; ++x) {
        col_of_digit[b.at(r0[0], x)] = x;
        row_of_digit[b.at(x, c0[0])] = x;
      }
      std::array<int, kSide> rows{}, cols{};
      for (int i = 0; i < kSide; ++i) {
        rows[i] = i < 3 ? r0[i] : row_of_digit[s.at(i, 0)];
        cols[i] = i < 3 ? c0[i] : col_of_digit[s.at(0, i)];
      }
      if (!groups_consistent(rows) || !groups_consistent(cols)) continue;
      Board out;
      for (int r = 0; r < kSide; ++r) {
        for (int c = 0; c < kSide; ++c) out.set(r, c, b.at(rows[r], cols[c]));
      }
      bool gnomon_ok = true;
      for (int k = 0; k < kCells && gnomon_ok; ++k) {
        if (in_gnomon(k)) gnomon_ok = out[k] == s[k];
      }
      if (!gnomon_ok) continue;
      if (!best || out < *best) best = out;
    }
  }
  return best;
}

}  // namespace

std::string NestLabel::to_string() const {
  return "[" + std::to_string(first) + "," + std::to_string(second) + "]";
}

NestLabel parse_label(Variant v, std::string_view text) {
  std::string t;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  }
  if (t.size() != 5 || t[0] != '[' || t[2] != ',' || t[4] != ']' ||
      !std::isdigit(static_cast<unsigned char>(t[1])) ||
      !std::isdigit(static_cast<unsigned char>(t[3]))) {
    throw FormatError("bad nest label \"" + std::string(text) + "\"; expected [a,b]");
  }
  return {v, static_cast<Digit>(t[1] - '0'), static_cast<Digit>(t[3] - '0')};
}

const std::vector<NestLabel>& nest_labels(Variant v) {
  static const std::vector<NestLabel> mm = [] {
    std::vector<NestLabel> out;
    for (auto [a, g] : std::initializer_list<std::pair<int, int>>{
             {1, 1}, {2, 2}, {7, 7}, {1, 2}, {2, 1}, {7, 2}, {1, 8}, {2, 7}, {7, 5}}) {
      out.push_back({Variant::kModularMagic, static_cast<Digit>(a), static_cast<Digit>(g)});
    }
    std::sort(out.begin(), out.end());
    return out;
  }();
  static const std::vector<NestLabel> sm = [] {
    std::vector<NestLabel> out;
    for (const Board& b : complete_standard_gnomon()) out.push_back(sm_label(b));
    std::sort(out.begin(), out.end());
    return out;
  }();
  return v == Variant::kModularMagic ? mm : sm;
}

bool is_valid_label(const NestLabel& label) {
  const auto& labels = nest_labels(label.variant);
  return std::binary_search(labels.begin(), labels.end(), label);
}

std::vector<Board> mm_pattern_matches(const Board& board) {
  return mm_scanner().matches(board, [](const std::array<Digit, 8>& x) {
    return x[0] < x[1] && x[2] == x[3];
  });
}

Canonical canonicalize_mm(const Board& board) {
  if (!is_modular_magic(board)) {
    throw DomainError("canonicalize_mm: board is not modular-magic");
  }
  std::vector<Board> found = mm_pattern_matches(board);
  if (found.size() != 1) {
    throw IntegrityError("canonicalize_mm: " + std::to_string(found.size()) +
                         " pattern matches in the H_mm-orbit of " + format_board(board));
  }
  return {mm_label(found.front()), found.front()};
}

Canonical canonicalize_sm(const Board& board) {
  if (!is_semi_magic(board)) {
    throw DomainError("canonicalize_sm: board is not semi-magic");
  }
  std::optional<Board> best = reduce_to_standard(board);
  if (auto t = reduce_to_standard(transposed(board)); t && (!best || *t < *best)) {
    best = t;
  }
  if (!best) {
    throw IntegrityError("canonicalize_sm: no gnomon-preserving reduction for " +
                         format_board(board));
  }
  return {sm_label(*best), *best};
}

Canonical canonicalize(Variant v, const Board& board) {
  return v == Variant::kModularMagic ? canonicalize_mm(board) : canonicalize_sm(board);
}

Canonical canonicalize_sm_orbit_scan(const Board& board) {
  if (!is_semi_magic(board)) {
    throw DomainError("canonicalize_sm_orbit_scan: board is not semi-magic");
  }
  std::vector<Board> found =
      sm_scanner().matches(board, [](const std::array<Digit, 8>&) { return true; });
  if (found.size() != 1) {
    throw IntegrityError("canonicalize_sm_orbit_scan: " + std::to_string(found.size()) +
                         " standard-gnomon images of " + format_board(board));
  }
  return {sm_label(found.front()), found.front()};
}

Board representative(const NestLabel& label) {
  if (!is_valid_label(label)) {
    throw DomainError("representative: " + label.to_string() + " is not a " +
                      std::string(variant_name(label.variant)) + " nest");
  }
  if (label.variant == Variant::kSemiMagic) {
    static const std::vector<Board> standard = complete_standard_gnomon();
    for (const Board& b : standard) {
      if (sm_label(b) == label) return b;
    }
    throw IntegrityError("representative: standard board missing for " + label.to_string());
  }
  PartialBoard p;
  for (const FixedCell& f : kMmSkeleton) {
    p.board[f.cell] = f.value;
    p.fixed.set(f.cell);
  }
  const Digit alpha = label.first;
  const auto beta = static_cast<Digit>((18 - 3 - alpha) % 9);
  p.board[kAlphaCell] = alpha;
  p.board[kBetaCell] = beta;
  p.board[kGammaCellA] = label.second;
  p.board[kGammaCellB] = label.second;
  for (int c : {kAlphaCell, kBetaCell, kGammaCellA, kGammaCellB}) p.fixed.set(c);
  std::vector<Board> boards;
  complete(Variant::kModularMagic, p, [&](const Board& b) { boards.push_back(b); });
  if (boards.size() != 1) {
    throw IntegrityError("representative: pattern " + label.to_string() + " has " +
                         std::to_string(boards.size()) + " completions");
  }
  return boards.front();
}

void Census::merge(const Census& other) {
  for (const auto& [label, n] : other.counts) counts[label] += n;
  total += other.total;
}

Census census(Variant v, unsigned threads) {
  // Build shared lookup state before workers start.
  if (v == Variant::kModularMagic) {
    (void)mm_scanner();
  } else {
    (void)standard_board();
  }
  Census out = parallel_enumerate<Census>(
      v, threads,
      [v](Census& c, const Board& b) {
        ++c.counts[canonicalize(v, b).label];
        ++c.total;
      },
      [](Census& into, const Census& from) { into.merge(from); });
  out.variant = v;
  return out;
}

}  // namespace mss
