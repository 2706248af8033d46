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
// Cell and digit permutations, board symmetries, and materialized groups.
//
// A Symmetry s = (cell, digit) acts on boards by
//
//   (s . B)(cell(k)) = digit(B(k))        i.e.  s . B = digit o B o cell^-1,
//
// which is a left action: act(compose(s2, s1), B) == act(s2, act(s1, B)).

#ifndef MSS_PERM_HPP_
#define MSS_PERM_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mss/board.hpp"

namespace mss {

struct Symmetry;
Symmetry compose(const Symmetry& s2, const Symmetry& s1);

class CellPermutation {
 public:
  using Images = std::array<std::uint8_t, kCells>;

  CellPermutation();  // identity

  // Throws DomainError unless `images` is a bijection on 0..80.
  static CellPermutation from_images(const Images& images);

  // Builds the permutation sending (r, c) to f(r, c) = {r', c'}; validated.
  template <class F>
  static CellPermutation from_coordinate_map(F f) {
    Images img{};
    for (int r = 0; r < kSide; ++r) {
      for (int c = 0; c < kSide; ++c) {
        auto [r2, c2] = f(r, c);
        img[cell_index(r, c)] = static_cast<std::uint8_t>(cell_index(r2, c2));
      }
    }
    return from_images(img);
  }

  int operator()(int cell) const { return image_[cell]; }
  const Images& images() const { return image_; }

  CellPermutation inverse() const;
  bool is_identity() const;

  friend auto operator<=>(const CellPermutation&,
                          const CellPermutation&) = default;

 private:
  friend Symmetry compose(const Symmetry& s2, const Symmetry& s1);
  Images image_;
};

class DigitPermutation {
 public:
  using Images = std::array<Digit, kDigits>;

  DigitPermutation();  // identity

  // Throws DomainError unless `images` is a bijection on 0..8.
  static DigitPermutation from_images(const Images& images);

  // Parses cycle notation such as "(12)(45)(78)"; "()" is the identity.
  // Throws FormatError on bad syntax and DomainError on repeated digits.
  static DigitPermutation from_cycles(std::string_view text);

  Digit operator()(Digit d) const { return image_[d]; }
  const Images& images() const { return image_; }

  DigitPermutation inverse() const;
  bool is_identity() const;

  // Cycle notation: each cycle starts at its smallest digit, cycles ordered
  // by that digit, fixed points omitted; the identity is "()".
  std::string to_cycles() const;

  friend auto operator<=>(const DigitPermutation&,
                          const DigitPermutation&) = default;

 private:
  friend Symmetry compose(const Symmetry& s2, const Symmetry& s1);
  Images image_;
};

struct Symmetry {
  CellPermutation cell;
  DigitPermutation digit;

  static Symmetry identity() { return {}; }
  static Symmetry of_cells(const CellPermutation& p) { return {p, {}}; }
  static Symmetry of_digits(const DigitPermutation& p) { return {{}, p}; }

  bool is_identity() const { return cell.is_identity() && digit.is_identity(); }

  friend auto operator<=>(const Symmetry&, const Symmetry&) = default;
};

Board act(const Symmetry& s, const Board& board);
// compose(s2, s1) is the symmetry "apply s1, then s2" (declared above).
Symmetry inverse(const Symmetry& s);

struct SymmetryHash {
  std::size_t operator()(const Symmetry& s) const noexcept;
};

inline constexpr std::size_t kDefaultClosureCap = 10'000'000;

// A finite group of symmetries with every element materialized.
class PermGroup {
 public:
  // Breadth-first closure of `generators` (identity implied). Throws
  // CapacityError once more than `cap` elements have been found.
  static PermGroup closure(std::vector<Symmetry> generators,
                           std::size_t cap = kDefaultClosureCap);

  // Wraps an explicit element list. Throws IntegrityError unless the list is
  // duplicate-free, contains the identity and is closed under composition.
  static PermGroup from_elements(std::vector<Symmetry> generators,
                                 std::vector<Symmetry> elements);

  const std::vector<Symmetry>& generators() const { return generators_; }
  const std::vector<Symmetry>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  bool contains(const Symmetry& s) const;
  // Every element has identity digit part (resp. identity cell part).
  bool is_cell_only() const;
  bool is_digit_only() const;

 private:
  PermGroup() = default;

  std::ptrdiff_t find(const Symmetry& s, std::uint64_t hash) const;
  void insert_index(std::uint32_t index, std::uint64_t hash);
  void grow_table();

  std::vector<Symmetry> generators_;
  std::vector<Symmetry> elements_;
  // Open-addressing slots: (hash tag << 32) | element index, or kEmpty.
  std::vector<std::uint64_t> table_;
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};
};

// Order of H x S for a cell-only group H and a digit-only group S. The two
// factors commute and intersect trivially, so the order is the product.
// Throws DomainError if either factor is of the wrong kind.
std::uint64_t direct_product_order(const PermGroup& cells,
                                   const PermGroup& digits);

}  // namespace mss

#endif  // MSS_PERM_HPP_
