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
// Keedwell boards: every block is alpha^c beta^d K for the upper-left block
// K, where alpha cycles the mini-rows of a block down by one and beta cycles
// the mini-columns right by one. The exponents form two 3x3 matrices over
// Z_3 indexed by block coordinates, with c[0][0] = d[0][0] = 0.

#ifndef MSS_KEEDWELL_HPP_
#define MSS_KEEDWELL_HPP_

#include <array>
#include <cstdint>
#include <optional>

#include "mss/board.hpp"

namespace mss {

using ExponentMatrix = std::array<std::array<std::uint8_t, 3>, 3>;

struct ExponentMatrices {
  ExponentMatrix c{};  // alpha exponents
  ExponentMatrix d{};  // beta exponents

  friend bool operator==(const ExponentMatrices&, const ExponentMatrices&) = default;
};

struct KeedwellDecomposition {
  Block k;
  ExponentMatrices exponents;
};

// Row r of the result is row (r - e mod 3) of the input.
Block apply_alpha(const Block& b, int e);
// Column c of the result is column (c - e mod 3) of the input.
Block apply_beta(const Block& b, int e);
// Exchange two mini-rows / mini-columns of a block.
Block swap_block_rows(const Block& b, int i, int j);
Block swap_block_cols(const Block& b, int i, int j);

// Throws DomainError if `board` is not a Sudoku board; returns nullopt if
// some block is not alpha^c beta^d of block (0,0).
std::optional<KeedwellDecomposition> keedwell_decompose(const Board& board);

// m[i][j] == m[i][0] + m[0][j] (mod 3) for all i, j.
bool is_quasi_linear(const ExponentMatrix& m);

// Number of quasi-linear exponent matrices (0, 1 or 2), or nullopt if the
// board is not Keedwell. Throws DomainError if it is not a Sudoku board.
std::optional<int> linearity_degree(const Board& board);

}  // namespace mss

#endif  // MSS_KEEDWELL_HPP_
