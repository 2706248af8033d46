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
// Nests: orbits of boards under the physical group that defines them
// (H_mm for modular-magic, the gnomon-preserving H_Gamma for semi-magic),
// each named by a unique representative board.
//
// Modular-magic representatives have {0,3,6} in a fixed pattern, with
// alpha = (0,2) < beta = (2,0) and gamma = (3,8) = (6,5); the label is
// [alpha, gamma]. Semi-magic representatives carry the standard gnomon and
// are labelled [a, b] with a = (6,5) and b = (5,6).

#ifndef MSS_NESTS_HPP_
#define MSS_NESTS_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mss/board.hpp"
#include "mss/enumerate.hpp"

namespace mss {

struct NestLabel {
  Variant variant = Variant::kModularMagic;
  Digit first = 0;
  Digit second = 0;

  std::string to_string() const;  // "[a,b]"
  friend auto operator<=>(const NestLabel&, const NestLabel&) = default;
};

// Parses "[a,b]" (whitespace tolerated). Does not check that the label is
// one of the variant's nests; see is_valid_label().
NestLabel parse_label(Variant v, std::string_view text);

// The nine modular-magic labels or the sixteen semi-magic ones, sorted.
const std::vector<NestLabel>& nest_labels(Variant v);
bool is_valid_label(const NestLabel& label);

struct Canonical {
  NestLabel label;
  Board board;
};

// Scans H_mm for the unique image of `board` matching the representative
// pattern. Throws DomainError if `board` is not modular-magic and
// IntegrityError if zero or several distinct matches exist.
Canonical canonicalize_mm(const Board& board);

// Constructive reduction to the standard gnomon: choose transpose from the
// row partition of block (0,0), fix rows/columns of band 0 and pillar 0 so
// block (0,0) is standard, then read off the remaining row and column order
// from the gnomon's digits. Throws DomainError if `board` is not semi-magic
// and IntegrityError if the reduction fails.
Canonical canonicalize_sm(const Board& board);

Canonical canonicalize(Variant v, const Board& board);

// Brute-force oracle for canonicalize_sm: scans all of H_Gamma for images
// carrying the standard gnomon. Throws IntegrityError if they are not all
// the same board.
Canonical canonicalize_sm_orbit_scan(const Board& board);

// All distinct boards in the H_mm-orbit of `board` matching the pattern
// (exactly one for every modular-magic board).
std::vector<Board> mm_pattern_matches(const Board& board);

// Throws DomainError for labels that are not nests of their variant.
Board representative(const NestLabel& label);

struct Census {
  Variant variant = Variant::kModularMagic;
  std::map<NestLabel, std::uint64_t> counts;
  std::uint64_t total = 0;

  void merge(const Census& other);
};

// Enumerates the variant and canonicalizes every board.
Census census(Variant v, unsigned threads = default_threads());

}  // namespace mss

#endif  // MSS_NESTS_HPP_
