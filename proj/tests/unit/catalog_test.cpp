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

#include "mss/catalog.hpp"

#include <set>

#include <gtest/gtest.h>

#include "mss/errors.hpp"
#include "support/fixtures.hpp"

namespace mss {
namespace {

using testing::board_of;

TEST(Mu, CycleForms) {
  EXPECT_EQ(mu(4, 0).to_cycles(), "(147)(285)");
  EXPECT_EQ(mu(5, 3).to_cycles(), "(03)(187245)");
  EXPECT_EQ(mu(5, 6).to_cycles(), "(06)(127548)");
  EXPECT_TRUE(mu(1, 0).is_identity());
  EXPECT_EQ(rho().to_cycles(), "(12)(45)(78)");
}

TEST(Mu, DomainErrors) {
  EXPECT_THROW(mu(3, 0), DomainError);
  EXPECT_THROW(mu(0, 0), DomainError);
  EXPECT_THROW(mu(4, 1), DomainError);
  EXPECT_THROW(mu(9, 0), DomainError);
}

TEST(CellBuilders, Coordinates) {
  EXPECT_EQ(transpose_cells()(cell_index(1, 7)), cell_index(7, 1));
  EXPECT_EQ(rot90_cells()(cell_index(0, 0)), cell_index(0, 8));
  EXPECT_EQ(rot90_cells()(cell_index(2, 5)), cell_index(5, 6));
  EXPECT_EQ(swap_bands_cells(0, 1)(cell_index(1, 4)), cell_index(4, 4));
  EXPECT_EQ(swap_pillars_cells(1, 2)(cell_index(0, 4)), cell_index(0, 7));
  EXPECT_EQ(swap_rows_cells(3, 5)(cell_index(3, 2)), cell_index(5, 2));
  EXPECT_EQ(swap_cols_cells(0, 2)(cell_index(6, 2)), cell_index(6, 0));
  EXPECT_EQ(cycle_rows_cells(1)(cell_index(3, 0)), cell_index(4, 0));
  EXPECT_EQ(cycle_rows_cells(1)(cell_index(5, 0)), cell_index(3, 0));
  EXPECT_EQ(cycle_cols_cells(2)(cell_index(0, 8)), cell_index(0, 6));
  // In band k, the rows other than local row f_k are exchanged.
  CellPermutation t = triple_rows_cells(2, 2, 2);
  EXPECT_EQ(t(cell_index(0, 0)), cell_index(1, 0));
  EXPECT_EQ(t(cell_index(3, 0)), cell_index(4, 0));
  EXPECT_EQ(t(cell_index(8, 0)), cell_index(8, 0));
  CellPermutation u = triple_cols_cells(0, 1, 2);
  EXPECT_EQ(u(cell_index(0, 1)), cell_index(0, 2));
  EXPECT_EQ(u(cell_index(0, 3)), cell_index(0, 5));
  EXPECT_EQ(u(cell_index(0, 6)), cell_index(0, 7));
}

TEST(ParseGenerator, Tokens) {
  EXPECT_EQ(parse_generator("rho").symmetry, Symmetry::of_digits(rho()));
  EXPECT_EQ(parse_generator(" mu( 4 , 0 ) ").name, "mu(4,0)");
  EXPECT_EQ(parse_generator("mu(4,0)").symmetry, Symmetry::of_digits(mu(4, 0)));
  EXPECT_EQ(parse_generator("(78)(12)(45)").name, "(12)(45)(78)");
  EXPECT_EQ(parse_generator("transpose").symmetry, Symmetry::of_cells(transpose_cells()));
  EXPECT_EQ(parse_generator("rot90").symmetry, Symmetry::of_cells(rot90_cells()));
  EXPECT_EQ(parse_generator("swap_bands(0,1)").symmetry,
            Symmetry::of_cells(swap_bands_cells(0, 1)));
  EXPECT_EQ(parse_generator("swap_pillars(1,2)").symmetry,
            Symmetry::of_cells(swap_pillars_cells(1, 2)));
  EXPECT_EQ(parse_generator("swap_rows(1,2)").symmetry, Symmetry::of_cells(swap_rows_cells(1, 2)));
  EXPECT_EQ(parse_generator("swap_cols(4,5)").symmetry, Symmetry::of_cells(swap_cols_cells(4, 5)));
  EXPECT_EQ(parse_generator("cycle_rows(2)").symmetry, Symmetry::of_cells(cycle_rows_cells(2)));
  EXPECT_EQ(parse_generator("cycle_cols(0)").symmetry, Symmetry::of_cells(cycle_cols_cells(0)));
  EXPECT_EQ(parse_generator("triple_rows(0,1,2)").symmetry,
            Symmetry::of_cells(triple_rows_cells(0, 1, 2)));
  EXPECT_EQ(parse_generator("triple_cols(2,2,2)").symmetry,
            Symmetry::of_cells(triple_cols_cells(2, 2, 2)));
}

TEST(ParseGenerator, Errors) {
  EXPECT_THROW(parse_generator(""), FormatError);
  EXPECT_THROW(parse_generator("flip"), FormatError);
  EXPECT_THROW(parse_generator("mu(4)"), FormatError);
  EXPECT_THROW(parse_generator("mu(4,x)"), FormatError);
  EXPECT_THROW(parse_generator("mu(3,0)"), DomainError);
  EXPECT_THROW(parse_generator("swap_bands(0,3)"), DomainError);
}

TEST(ParseGenerator, List) {
  auto gens = parse_generator_list("rho, mu(4,0),(12)(45)(78) ,swap_bands(0,1)");
  ASSERT_EQ(gens.size(), 4u);
  EXPECT_EQ(gens[1].name, "mu(4,0)");
  EXPECT_EQ(gens[2].name, "(12)(45)(78)");
  EXPECT_TRUE(parse_generator_list("").empty());
  EXPECT_THROW(parse_generator_list("mu(4,0"), FormatError);
}

TEST(HMm, OrderAndPreservation) {
  EXPECT_EQ(h_mm_group().order(), 4608u);
  EXPECT_TRUE(h_mm_group().is_cell_only());
  const Board b = board_of(testing::kModularMagicBoard);
  for (const auto& g : h_mm_generators()) {
    EXPECT_TRUE(is_modular_magic(act(g.symmetry, b))) << g.name;
  }
}

TEST(HMm, MiddleRowSwapExcluded) {
  const Symmetry s = Symmetry::of_cells(swap_rows_cells(0, 1));
  EXPECT_FALSE(h_mm_group().contains(s));
  EXPECT_FALSE(is_modular_magic(act(s, board_of(testing::kModularMagicBoard))));
}

TEST(HMm, EveryElementPreservesModularMagic) {
  const Board b = board_of(testing::kLargeOrbitBoard);
  for (const Symmetry& h : h_mm_group().elements()) ASSERT_TRUE(is_modular_magic(act(h, b)));
}

TEST(SMm, FormulaMatchesClosure) {
  PermGroup s = s_mm_elements();
  EXPECT_EQ(s.order(), 36u);
  EXPECT_TRUE(s.contains(Symmetry::of_digits(DigitPermutation::from_cycles("(12)(45)(78)"))));
  PermGroup gen = PermGroup::closure(symmetries_of(s_mm_generators()));
  std::set<Symmetry> a(s.elements().begin(), s.elements().end());
  std::set<Symmetry> b(gen.elements().begin(), gen.elements().end());
  EXPECT_EQ(a, b);
  const Board ref = board_of(testing::kModularMagicBoard);
  for (const Symmetry& e : s.elements()) EXPECT_TRUE(is_modular_magic(act(e, ref)));
}

TEST(HGamma, OrderMatchesBoardOrbit) {
  const PermGroup& g = h_gamma_group();
  EXPECT_EQ(g.order(), 373248u);
  EXPECT_EQ(373248u, 72u * 72u * 72u);
  // H_Gamma acts freely on semi-magic boards, so the orbit has |H_Gamma|
  // boards; the orbit is computed by plain board BFS.
  auto orbit = testing::board_orbit(board_of(testing::kSemiMagicBoard),
                                    symmetries_of(h_gamma_generators()));
  EXPECT_EQ(orbit.size(), g.order());
}

TEST(HGamma, GeneratorsPreserveSemiMagic) {
  const Board b = board_of(testing::kSemiMagicBoard);
  for (const auto& g : h_gamma_generators()) {
    EXPECT_TRUE(is_semi_magic(act(g.symmetry, b))) << g.name;
  }
}

TEST(HGamma, KeepsTheGnomonCornerAndExcludesBandSwap) {
  for (const Symmetry& h : h_gamma_group().elements()) {
    int image = h.cell(0);
    ASSERT_LT(row_of(image), 3);
    ASSERT_LT(col_of(image), 3);
  }
  EXPECT_FALSE(h_gamma_group().contains(Symmetry::of_cells(swap_bands_cells(0, 1))));
}

TEST(SSm, BruteForceGroup) {
  const PermGroup& s = s_sm_group();
  EXPECT_EQ(s.order(), 72u);
  EXPECT_TRUE(s.contains(Symmetry::identity()));
  EXPECT_TRUE(s.contains(Symmetry::of_digits(DigitPermutation::from_cycles("(12)(45)(78)"))));
  for (const Symmetry& a : s.elements()) {
    for (const Symmetry& b : s.elements()) ASSERT_TRUE(s.contains(compose(a, b)));
  }
  const Board ref = board_of(testing::kSemiMagicBoard);
  for (const Symmetry& e : s.elements()) EXPECT_TRUE(is_semi_magic(act(e, ref)));
  PermGroup gen = PermGroup::closure(symmetries_of(s_sm_generators()));
  EXPECT_EQ(gen.order(), 72u);
}

TEST(H9, OrderMembershipAndProduct) {
  const PermGroup& h9 = h9_group();
  EXPECT_EQ(h9.order(), 3359232u);
  // rot90 = transpose, then reverse the column order.
  CellPermutation reverse_cols = CellPermutation::from_coordinate_map(
      [](int r, int c) { return std::pair{r, 8 - c}; });
  Symmetry built = compose(Symmetry::of_cells(reverse_cols), Symmetry::of_cells(transpose_cells()));
  EXPECT_EQ(built, Symmetry::of_cells(rot90_cells()));
  EXPECT_TRUE(h9.contains(built));
  for (const auto& g : h_mm_generators()) EXPECT_TRUE(h9.contains(g.symmetry)) << g.name;
  for (const auto& g : h_gamma_generators()) EXPECT_TRUE(h9.contains(g.symmetry)) << g.name;
  EXPECT_EQ(direct_product_order(h9, s_sm_group()), 241864704u);
}

}  // namespace
}  // namespace mss
