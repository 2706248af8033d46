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

#include "mss/analysis.hpp"

#include <algorithm>
#include <string>

#include "mss/errors.hpp"
#include "mss/nest_graph.hpp"

namespace mss {

bool check_two_equal(const Board& board) {
  if (!is_modular_magic(board)) {
    throw DomainError("check_two_equal: board is not modular-magic");
  }
  for (Digit center : {Digit{0}, Digit{3}, Digit{6}}) {
    std::vector<std::array<Digit, 2>> sets;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        Block b = block(board, i, j);
        if (b.at(1, 1) == center) sets.push_back(off_diagonal_set(b));
      }
    }
    if (sets.size() != 3) return false;
    if (sets[0] != sets[1] && sets[0] != sets[2] && sets[1] != sets[2]) return false;
  }
  return true;
}

std::vector<std::uint64_t> orbit_sizes(const Census& census,
                                       std::span<const NamedGenerator> relabelings,
                                       std::span<const NamedGenerator> physical) {
  NestGraph g = build_nest_graph(census.variant, relabelings, physical);
  std::vector<std::uint64_t> out;
  for (const auto& component : weak_components(g)) {
    std::uint64_t size = 0;
    for (const NestLabel& l : component) {
      auto it = census.counts.find(l);
      if (it != census.counts.end()) size += it->second;
    }
    out.push_back(size);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> full_orbit_sizes(const Census& census) {
  const Variant v = census.variant;
  const std::vector<NamedGenerator> rel =
      v == Variant::kModularMagic ? s_mm_generators() : s_sm_generators();
  return orbit_sizes(census, rel, extra_physical_generators(v));
}

std::uint64_t full_group_order(Variant v) {
  return v == Variant::kModularMagic ? direct_product_order(h_mm_group(), s_mm_group())
                                     : direct_product_order(h9_group(), s_sm_group());
}

G9Certificate g9_minimality_certificate(const BigInt& total_boards,
                                        const BigInt& orbit_count,
                                        const BigInt& group_order) {
  if (total_boards <= 0 || orbit_count <= 0 || group_order <= 0) {
    throw DomainError("g9_minimality_certificate: inputs must be positive integers");
  }
  G9Certificate c;
  c.total_boards = total_boards;
  c.orbit_count = orbit_count;
  c.group_order = group_order;
  c.average_orbit_floor = total_boards / orbit_count;
  c.bound_holds = 2 * total_boards > orbit_count * group_order;
  return c;
}

BigInt sudoku_board_count() { return BigInt("6670903752021072936960"); }
BigInt sudoku_orbit_count() { return BigInt("5472730538"); }

BigInt g9_order() {
  // |H_9| = 2 * 6^8, |S_9| = 9!.
  BigInt h9 = 2;
  for (int i = 0; i < 8; ++i) h9 *= 6;
  BigInt s9 = 1;
  for (int i = 2; i <= 9; ++i) s9 *= i;
  return h9 * s9;
}

BigInt parse_big_int(std::string_view text) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw FormatError("expected a non-negative decimal integer, got \"" +
                      std::string(text) + "\"");
  }
  return BigInt(std::string(text));
}

}  // namespace mss
