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
// Named generators and the concrete symmetry groups of the two variants.
//
// Generator tokens (all indices 0-based):
//
//   transpose               (r, c) -> (c, r)
//   rot90                   clockwise quarter turn, (r, c) -> (c, 8 - r)
//   swap_bands(i,j)         exchange bands i and j (rows 3i.. with 3j..)
//   swap_pillars(i,j)       exchange pillars i and j
//   swap_rows(r1,r2)        exchange rows r1 and r2
//   swap_cols(c1,c2)        exchange columns c1 and c2
//   cycle_rows(b)           rows 3b -> 3b+1 -> 3b+2 -> 3b inside band b
//   cycle_cols(p)           columns 3p -> 3p+1 -> 3p+2 -> 3p inside pillar p
//   triple_rows(f0,f1,f2)   in each band k swap the two rows other than the
//                           band's local row f_k (so triple_rows(2,2,2) swaps
//                           rows 0/1, 3/4 and 6/7)
//   triple_cols(f0,f1,f2)   the column analogue
//   rho                     the relabeling (12)(45)(78)
//   mu(k,l)                 the relabeling n -> k n + l mod 9
//   (..)(..)                any relabeling in cycle notation

#ifndef MSS_CATALOG_HPP_
#define MSS_CATALOG_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "mss/perm.hpp"

namespace mss {

struct NamedGenerator {
  std::string name;
  Symmetry symmetry;
};

CellPermutation transpose_cells();
CellPermutation rot90_cells();
CellPermutation swap_bands_cells(int i, int j);
CellPermutation swap_pillars_cells(int i, int j);
CellPermutation swap_rows_cells(int r1, int r2);
CellPermutation swap_cols_cells(int c1, int c2);
CellPermutation cycle_rows_cells(int band);
CellPermutation cycle_cols_cells(int pillar);
CellPermutation triple_rows_cells(int f0, int f1, int f2);
CellPermutation triple_cols_cells(int f0, int f1, int f2);

DigitPermutation rho();
// n -> k n + l mod 9. Throws DomainError unless k is in {1,2,4,5,7,8} and
// l is in {0,3,6}.
DigitPermutation mu(int k, int l);

// Parses one token from the table above. Throws FormatError for unknown or
// malformed tokens and DomainError for out-of-range arguments.
NamedGenerator parse_generator(std::string_view token);
// Comma-separated list; commas inside parentheses belong to the token.
std::vector<NamedGenerator> parse_generator_list(std::string_view text);

std::vector<Symmetry> symmetries_of(const std::vector<NamedGenerator>& gens);

// Band, pillar and outer row/column transpositions, transpose and rot90.
std::vector<NamedGenerator> h_mm_generators();
// Transpose, within-band row and within-pillar column transpositions, and
// the band/pillar 1<->2 swaps. These fix the gnomon as a set.
std::vector<NamedGenerator> h_gamma_generators();
// Every row, column, band and pillar transposition plus transpose.
std::vector<NamedGenerator> h9_generators();
// Keedwell-preserving generators: transpose, band/pillar transpositions,
// one 3-cycle per band and pillar, all 27 + 27 triple-transpositions, and
// the relabelings (01) and (012345678), which together generate every
// relabeling.
std::vector<NamedGenerator> g_k_generators();

// The 36 relabelings mu(k,l) and rho o mu(k,l), cross-checked against the
// closure of {rho, mu(4,0), mu(5,3), mu(5,6)}. Throws IntegrityError if the
// two disagree.
PermGroup s_mm_elements();
// Every relabeling that maps each semi-magic block to a semi-magic block,
// found by scanning all 9! digit permutations.
PermGroup s_sm_elements();

std::vector<NamedGenerator> s_mm_generators();
// A small generating set for S_sm, chosen greedily from its elements.
std::vector<NamedGenerator> s_sm_generators();

// Lazily built, process-wide groups. h9_group() materializes 3,359,232
// elements (roughly 300 MB); call it only when needed.
const PermGroup& h_mm_group();
const PermGroup& h_gamma_group();
const PermGroup& h9_group();
const PermGroup& s_mm_group();
const PermGroup& s_sm_group();

}  // namespace mss

#endif  // MSS_CATALOG_HPP_
