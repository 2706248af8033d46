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

#include "mss/perm.hpp"

#include <bit>
#include <cstring>
#include <numeric>

#include "mss/errors.hpp"

namespace mss {

namespace {

template <std::size_t N>
bool is_bijection(const std::array<std::uint8_t, N>& img) {
  std::array<bool, N> seen{};
  for (auto v : img) {
    if (v >= N || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::uint64_t mix(std::uint64_t h) {
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdull;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ull;
  h ^= h >> 33;
  return h;
}

std::uint64_t hash_symmetry(const Symmetry& s) {
  static_assert(sizeof(Symmetry) == kCells + kDigits);
  unsigned char bytes[sizeof(Symmetry)];
  std::memcpy(bytes, &s, sizeof(Symmetry));
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  std::size_t i = 0;
  for (; i + 8 <= sizeof(bytes); i += 8) {
    std::uint64_t w;
    std::memcpy(&w, bytes + i, 8);
    h = mix(h ^ w) + i;
  }
  std::uint64_t tail = 0;
  std::memcpy(&tail, bytes + i, sizeof(bytes) - i);
  return mix(h ^ tail);
}

}  // namespace

CellPermutation::CellPermutation() {
  std::iota(image_.begin(), image_.end(), std::uint8_t{0});
}

CellPermutation CellPermutation::from_images(const Images& images) {
  if (!is_bijection(images)) {
    throw DomainError("cell permutation is not a bijection on 0..80");
  }
  CellPermutation p;
  p.image_ = images;
  return p;
}

CellPermutation CellPermutation::inverse() const {
  CellPermutation out;
  for (int k = 0; k < kCells; ++k) out.image_[image_[k]] = static_cast<std::uint8_t>(k);
  return out;
}

bool CellPermutation::is_identity() const {
  for (int k = 0; k < kCells; ++k) {
    if (image_[k] != k) return false;
  }
  return true;
}

DigitPermutation::DigitPermutation() {
  std::iota(image_.begin(), image_.end(), Digit{0});
}

DigitPermutation DigitPermutation::from_images(const Images& images) {
  if (!is_bijection(images)) {
    throw DomainError("digit permutation is not a bijection on 0..8");
  }
  DigitPermutation p;
  p.image_ = images;
  return p;
}

DigitPermutation DigitPermutation::from_cycles(std::string_view text) {
  DigitPermutation p;
  std::array<bool, kDigits> used{};
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i == text.size()) throw FormatError("empty cycle notation");
  while (i < text.size()) {
    if (text[i] != '(') {
      throw FormatError("cycle notation: expected '(' in \"" +
                        std::string(text) + "\"");
    }
    ++i;
    std::vector<Digit> cycle;
    while (i < text.size() && text[i] != ')') {
      char ch = text[i++];
      if (ch == ' ') continue;
      if (ch < '0' || ch > '8') {
        throw FormatError(std::string("cycle notation: bad digit '") + ch + "'");
      }
      auto d = static_cast<Digit>(ch - '0');
      if (used[d]) {
        throw DomainError("cycle notation: digit " + std::to_string(d) +
                          " appears twice");
      }
      used[d] = true;
      cycle.push_back(d);
    }
    if (i == text.size()) throw FormatError("cycle notation: missing ')'");
    ++i;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      p.image_[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    skip_ws();
  }
  return p;
}

DigitPermutation DigitPermutation::inverse() const {
  DigitPermutation out;
  for (int d = 0; d < kDigits; ++d) out.image_[image_[d]] = static_cast<Digit>(d);
  return out;
}

bool DigitPermutation::is_identity() const {
  for (int d = 0; d < kDigits; ++d) {
    if (image_[d] != d) return false;
  }
  return true;
}

std::string DigitPermutation::to_cycles() const {
  std::string out;
  std::array<bool, kDigits> done{};
  for (int start = 0; start < kDigits; ++start) {
    if (done[start] || image_[start] == start) continue;
    out += '(';
    int d = start;
    do {
      done[d] = true;
      out += static_cast<char>('0' + d);
      d = image_[d];
    } while (d != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Board act(const Symmetry& s, const Board& board) {
  Board out;
  const auto& cell = s.cell.images();
  const auto& digit = s.digit.images();
  for (int k = 0; k < kCells; ++k) out[cell[k]] = digit[board[k]];
  return out;
}

Symmetry compose(const Symmetry& s2, const Symmetry& s1) {
  Symmetry out;
  const auto& c1 = s1.cell.image_;
  const auto& c2 = s2.cell.image_;
  for (int k = 0; k < kCells; ++k) out.cell.image_[k] = c2[c1[k]];
  const auto& d1 = s1.digit.image_;
  const auto& d2 = s2.digit.image_;
  for (int d = 0; d < kDigits; ++d) out.digit.image_[d] = d2[d1[d]];
  return out;
}

Symmetry inverse(const Symmetry& s) {
  return {s.cell.inverse(), s.digit.inverse()};
}

std::size_t SymmetryHash::operator()(const Symmetry& s) const noexcept {
  return static_cast<std::size_t>(hash_symmetry(s));
}

std::ptrdiff_t PermGroup::find(const Symmetry& s, std::uint64_t hash) const {
  if (table_.empty()) return -1;
  const std::size_t mask = table_.size() - 1;
  const auto tag = hash >> 32;
  for (std::size_t slot = hash & mask;; slot = (slot + 1) & mask) {
    std::uint64_t entry = table_[slot];
    if (entry == kEmpty) return -1;
    if ((entry >> 32) == tag) {
      auto index = static_cast<std::uint32_t>(entry);
      if (elements_[index] == s) return index;
    }
  }
}

void PermGroup::insert_index(std::uint32_t index, std::uint64_t hash) {
  const std::size_t mask = table_.size() - 1;
  std::size_t slot = hash & mask;
  while (table_[slot] != kEmpty) slot = (slot + 1) & mask;
  table_[slot] = ((hash >> 32) << 32) | index;
}

void PermGroup::grow_table() {
  std::size_t capacity = std::max<std::size_t>(64, table_.size() * 2);
  table_.assign(capacity, kEmpty);
  for (std::uint32_t i = 0; i < elements_.size(); ++i) {
    insert_index(i, hash_symmetry(elements_[i]));
  }
}

bool PermGroup::contains(const Symmetry& s) const {
  return find(s, hash_symmetry(s)) >= 0;
}

PermGroup PermGroup::closure(std::vector<Symmetry> generators,
                             std::size_t cap) {
  PermGroup g;
  g.generators_ = std::move(generators);
  g.grow_table();
  auto try_add = [&g, cap](const Symmetry& s) {
    std::uint64_t h = hash_symmetry(s);
    if (g.find(s, h) >= 0) return;
    if (g.elements_.size() >= cap) {
      throw CapacityError("closure exceeds element cap of " + std::to_string(cap));
    }
    g.elements_.push_back(s);
    if (2 * g.elements_.size() > g.table_.size()) {
      g.grow_table();
    } else {
      g.insert_index(static_cast<std::uint32_t>(g.elements_.size() - 1), h);
    }
  };
  try_add(Symmetry::identity());
  for (std::size_t i = 0; i < g.elements_.size(); ++i) {
    for (const Symmetry& gen : g.generators_) {
      // elements_ may reallocate inside try_add; copy the operand first.
      Symmetry x = g.elements_[i];
      try_add(compose(gen, x));
    }
  }
  return g;
}

PermGroup PermGroup::from_elements(std::vector<Symmetry> generators,
                                   std::vector<Symmetry> elements) {
  PermGroup g;
  g.generators_ = std::move(generators);
  g.elements_ = std::move(elements);
  g.table_.assign(std::bit_ceil(std::max<std::size_t>(64, 2 * g.elements_.size())),
                  kEmpty);
  for (std::uint32_t i = 0; i < g.elements_.size(); ++i) {
    std::uint64_t h = hash_symmetry(g.elements_[i]);
    if (g.find(g.elements_[i], h) >= 0) {
      throw IntegrityError("group element list contains a duplicate");
    }
    g.insert_index(i, h);
  }
  if (!g.contains(Symmetry::identity())) {
    throw IntegrityError("group element list lacks the identity");
  }
  for (const Symmetry& a : g.elements_) {
    for (const Symmetry& b : g.elements_) {
      if (!g.contains(compose(a, b))) {
        throw IntegrityError("group element list is not closed under composition");
      }
    }
  }
  return g;
}

bool PermGroup::is_cell_only() const {
  for (const Symmetry& s : elements_) {
    if (!s.digit.is_identity()) return false;
  }
  return true;
}

bool PermGroup::is_digit_only() const {
  for (const Symmetry& s : elements_) {
    if (!s.cell.is_identity()) return false;
  }
  return true;
}

std::uint64_t direct_product_order(const PermGroup& cells,
                                   const PermGroup& digits) {
  if (!cells.is_cell_only()) {
    throw DomainError("direct_product_order: first factor moves digits");
  }
  if (!digits.is_digit_only()) {
    throw DomainError("direct_product_order: second factor moves cells");
  }
  return static_cast<std::uint64_t>(cells.order()) * digits.order();
}

}  // namespace mss
