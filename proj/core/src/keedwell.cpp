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

#include "mss/keedwell.hpp"

#include <utility>

#include "mss/errors.hpp"

namespace mss {

namespace {

int mod3(int x) { return ((x % 3) + 3) % 3; }

}  // namespace

Block apply_alpha(const Block& b, int e) {
  Block out;
  for (int r = 0; r < 3; ++r) out.entries[r] = b.entries[mod3(r - e)];
  return out;
}

Block apply_beta(const Block& b, int e) {
  Block out;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) out.entries[r][c] = b.entries[r][mod3(c - e)];
  }
  return out;
}

Block swap_block_rows(const Block& b, int i, int j) {
  Block out = b;
  std::swap(out.entries[i], out.entries[j]);
  return out;
}

Block swap_block_cols(const Block& b, int i, int j) {
  Block out = b;
  for (int r = 0; r < 3; ++r) std::swap(out.entries[r][i], out.entries[r][j]);
  return out;
}

std::optional<KeedwellDecomposition> keedwell_decompose(const Board& board) {
  if (!is_sudoku(board)) {
    throw DomainError("keedwell_decompose: not a Sudoku board");
  }
  KeedwellDecomposition out;
  out.k = block(board, 0, 0);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Block target = block(board, i, j);
      bool found = false;
      for (int c = 0; c < 3 && !found; ++c) {
        for (int d = 0; d < 3 && !found; ++d) {
          if (apply_alpha(apply_beta(out.k, d), c) == target) {
            out.exponents.c[i][j] = static_cast<std::uint8_t>(c);
            out.exponents.d[i][j] = static_cast<std::uint8_t>(d);
            found = true;
          }
        }
      }
      if (!found) return std::nullopt;
    }
  }
  return out;
}

bool is_quasi_linear(const ExponentMatrix& m) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (mod3(m[i][j]) != mod3(m[i][0] + m[0][j])) return false;
    }
  }
  return true;
}

std::optional<int> linearity_degree(const Board& board) {
  auto dec = keedwell_decompose(board);
  if (!dec) return std::nullopt;
  return static_cast<int>(is_quasi_linear(dec->exponents.c)) +
         static_cast<int>(is_quasi_linear(dec->exponents.d));
}

}  // namespace mss
