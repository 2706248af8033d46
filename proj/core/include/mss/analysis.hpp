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

#ifndef MSS_ANALYSIS_HPP_
#define MSS_ANALYSIS_HPP_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mss/catalog.hpp"
#include "mss/nests.hpp"

namespace mss {

using BigInt = boost::multiprecision::cpp_int;

// For each center digit j in {0,3,6}, at least two of the three blocks
// centred on j share their off-diagonal set. Throws DomainError if the
// board is not modular-magic.
bool check_two_equal(const Board& board);

// Orbit sizes of (nest group) x <relabelings, physical> on the variant's
// boards: nest-graph components weighted by census counts, ascending.
std::vector<std::uint64_t> orbit_sizes(const Census& census,
                                       std::span<const NamedGenerator> relabelings,
                                       std::span<const NamedGenerator> physical = {});

// Orbits of the full group: all of S_mm for modular-magic; all of S_sm plus
// the extra physical swaps for semi-magic.
std::vector<std::uint64_t> full_orbit_sizes(const Census& census);

// Order of the full symmetry group H x S of the variant.
std::uint64_t full_group_order(Variant v);

struct G9Certificate {
  BigInt total_boards;
  BigInt orbit_count;
  BigInt group_order;
  BigInt average_orbit_floor;  // floor(total_boards / orbit_count)
  // 2 * total_boards > orbit_count * group_order: the average orbit exceeds
  // half the group, so some board has a trivial stabilizer.
  bool bound_holds = false;
};

// Throws DomainError unless all three inputs are positive.
G9Certificate g9_minimality_certificate(const BigInt& total_boards,
                                        const BigInt& orbit_count,
                                        const BigInt& group_order);

// Published inputs: completed Sudoku boards, orbits under G_9, and
// |G_9| = |H_9| * 9!.
BigInt sudoku_board_count();
BigInt sudoku_orbit_count();
BigInt g9_order();

// Decimal digits only. Throws FormatError otherwise.
BigInt parse_big_int(std::string_view text);

}  // namespace mss

#endif  // MSS_ANALYSIS_HPP_
