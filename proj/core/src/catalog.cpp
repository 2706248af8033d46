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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <utility>

#include "mss/enumerate.hpp"
#include "mss/errors.hpp"

namespace mss {

namespace {

using RowCol = std::pair<int, int>;

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

int swap_index(int x, int a, int b) { return x == a ? b : (x == b ? a : x); }

// Maps local index 0..2 inside a group of three so that the two entries
// other than `fixed` are exchanged.
int swap_except(int local, int fixed) {
  if (local == fixed) return local;
  return 3 - fixed - local;
}

std::string call(std::string_view name, std::initializer_list<int> args) {
  std::string out(name);
  out += '(';
  bool first = true;
  for (int a : args) {
    if (!first) out += ',';
    out += std::to_string(a);
    first = false;
  }
  out += ')';
  return out;
}

NamedGenerator cells(std::string name, const CellPermutation& p) {
  return {std::move(name), Symmetry::of_cells(p)};
}

NamedGenerator digits(std::string name, const DigitPermutation& p) {
  return {std::move(name), Symmetry::of_digits(p)};
}

bool maps_blocks_into(const DigitPermutation& p, const std::vector<Block>& blocks) {
  for (const Block& b : blocks) {
    Block img;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) img.entries[r][c] = p(b.entries[r][c]);
    }
    if (!is_semi_magic_block(img)) return false;
  }
  return true;
}

std::vector<NamedGenerator> greedy_generators(const PermGroup& group) {
  std::vector<NamedGenerator> gens;
  std::vector<Symmetry> syms;
  std::size_t reached = 1;
  for (const Symmetry& s : group.elements()) {
    if (reached == group.order()) break;
    if (s.is_identity()) continue;
    syms.push_back(s);
    PermGroup trial = PermGroup::closure(syms);
    if (trial.order() > reached) {
      reached = trial.order();
      gens.push_back(digits(s.digit.to_cycles(), s.digit));
    } else {
      syms.pop_back();
    }
  }
  return gens;
}

}  // namespace

CellPermutation transpose_cells() {
  return CellPermutation::from_coordinate_map([](int r, int c) { return RowCol{c, r}; });
}

CellPermutation rot90_cells() {
  return CellPermutation::from_coordinate_map(
      [](int r, int c) { return RowCol{c, kSide - 1 - r}; });
}

CellPermutation swap_bands_cells(int i, int j) {
  require(i >= 0 && i < 3 && j >= 0 && j < 3 && i != j,
          "swap_bands: need two distinct bands in 0..2");
  return CellPermutation::from_coordinate_map([=](int r, int c) {
    return RowCol{3 * swap_index(r / 3, i, j) + r % 3, c};
  });
}

CellPermutation swap_pillars_cells(int i, int j) {
  require(i >= 0 && i < 3 && j >= 0 && j < 3 && i != j,
          "swap_pillars: need two distinct pillars in 0..2");
  return CellPermutation::from_coordinate_map([=](int r, int c) {
    return RowCol{r, 3 * swap_index(c / 3, i, j) + c % 3};
  });
}

CellPermutation swap_rows_cells(int r1, int r2) {
  require(r1 >= 0 && r1 < kSide && r2 >= 0 && r2 < kSide && r1 != r2,
          "swap_rows: need two distinct rows in 0..8");
  return CellPermutation::from_coordinate_map(
      [=](int r, int c) { return RowCol{swap_index(r, r1, r2), c}; });
}

CellPermutation swap_cols_cells(int c1, int c2) {
  require(c1 >= 0 && c1 < kSide && c2 >= 0 && c2 < kSide && c1 != c2,
          "swap_cols: need two distinct columns in 0..8");
  return CellPermutation::from_coordinate_map(
      [=](int r, int c) { return RowCol{r, swap_index(c, c1, c2)}; });
}

CellPermutation cycle_rows_cells(int band) {
  require(band >= 0 && band < 3, "cycle_rows: band must be in 0..2");
  return CellPermutation::from_coordinate_map([=](int r, int c) {
    if (r / 3 != band) return RowCol{r, c};
    return RowCol{3 * band + (r % 3 + 1) % 3, c};
  });
}

CellPermutation cycle_cols_cells(int pillar) {
  require(pillar >= 0 && pillar < 3, "cycle_cols: pillar must be in 0..2");
  return CellPermutation::from_coordinate_map([=](int r, int c) {
    if (c / 3 != pillar) return RowCol{r, c};
    return RowCol{r, 3 * pillar + (c % 3 + 1) % 3};
  });
}

CellPermutation triple_rows_cells(int f0, int f1, int f2) {
  const int fixed[3] = {f0, f1, f2};
  for (int f : fixed) require(f >= 0 && f < 3, "triple_rows: arguments must be in 0..2");
  return CellPermutation::from_coordinate_map([&](int r, int c) {
    return RowCol{3 * (r / 3) + swap_except(r % 3, fixed[r / 3]), c};
  });
}

CellPermutation triple_cols_cells(int f0, int f1, int f2) {
  const int fixed[3] = {f0, f1, f2};
  for (int f : fixed) require(f >= 0 && f < 3, "triple_cols: arguments must be in 0..2");
  return CellPermutation::from_coordinate_map([&](int r, int c) {
    return RowCol{r, 3 * (c / 3) + swap_except(c % 3, fixed[c / 3])};
  });
}

DigitPermutation rho() { return DigitPermutation::from_cycles("(12)(45)(78)"); }

DigitPermutation mu(int k, int l) {
  require(k == 1 || k == 2 || k == 4 || k == 5 || k == 7 || k == 8,
          "mu: k must be one of 1,2,4,5,7,8");
  require(l == 0 || l == 3 || l == 6, "mu: l must be one of 0,3,6");
  DigitPermutation::Images img;
  for (int n = 0; n < kDigits; ++n) img[n] = static_cast<Digit>((k * n + l) % 9);
  return DigitPermutation::from_images(img);
}

NamedGenerator parse_generator(std::string_view token) {
  std::string t;
  for (char ch : token) {
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  }
  if (t.empty()) throw FormatError("empty generator token");
  if (t.front() == '(') {
    DigitPermutation p = DigitPermutation::from_cycles(t);
    return digits(p.to_cycles(), p);
  }
  if (t == "rho") return digits("rho", rho());
  if (t == "transpose") return cells("transpose", transpose_cells());
  if (t == "rot90") return cells("rot90", rot90_cells());

  auto open = t.find('(');
  if (open == std::string::npos || t.back() != ')') {
    throw FormatError("unknown generator token \"" + t + "\"");
  }
  std::string name = t.substr(0, open);
  std::vector<int> args;
  std::string_view inner(t.data() + open + 1, t.size() - open - 2);
  while (!inner.empty()) {
    auto comma = inner.find(',');
    std::string_view piece = inner.substr(0, comma);
    int v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty()) {
      throw FormatError("bad argument \"" + std::string(piece) + "\" in \"" + t + "\"");
    }
    args.push_back(v);
    if (comma == std::string_view::npos) break;
    inner.remove_prefix(comma + 1);
  }
  auto want = [&](std::size_t n) {
    if (args.size() != n) {
      throw FormatError("\"" + name + "\" takes " + std::to_string(n) + " argument(s)");
    }
  };
  if (name == "mu") {
    want(2);
    return digits(call(name, {args[0], args[1]}), mu(args[0], args[1]));
  }
  if (name == "swap_bands") {
    want(2);
    return cells(call(name, {args[0], args[1]}), swap_bands_cells(args[0], args[1]));
  }
  if (name == "swap_pillars") {
    want(2);
    return cells(call(name, {args[0], args[1]}), swap_pillars_cells(args[0], args[1]));
  }
  if (name == "swap_rows") {
    want(2);
    return cells(call(name, {args[0], args[1]}), swap_rows_cells(args[0], args[1]));
  }
  if (name == "swap_cols") {
    want(2);
    return cells(call(name, {args[0], args[1]}), swap_cols_cells(args[0], args[1]));
  }
  if (name == "cycle_rows") {
    want(1);
    return cells(call(name, {args[0]}), cycle_rows_cells(args[0]));
  }
  if (name == "cycle_cols") {
    want(1);
    return cells(call(name, {args[0]}), cycle_cols_cells(args[0]));
  }
  if (name == "triple_rows") {
    want(3);
    return cells(call(name, {args[0], args[1], args[2]}),
                 triple_rows_cells(args[0], args[1], args[2]));
  }
  if (name == "triple_cols") {
    want(3);
    return cells(call(name, {args[0], args[1], args[2]}),
                 triple_cols_cells(args[0], args[1], args[2]));
  }
  throw FormatError("unknown generator token \"" + t + "\"");
}

std::vector<NamedGenerator> parse_generator_list(std::string_view text) {
  std::vector<NamedGenerator> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      std::string_view token = text.substr(start, i - start);
      bool blank = std::all_of(token.begin(), token.end(),
                               [](unsigned char c) { return std::isspace(c); });
      if (!blank) out.push_back(parse_generator(token));
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      if (--depth < 0) throw FormatError("unbalanced ')' in generator list");
    }
  }
  if (depth != 0) throw FormatError("unbalanced '(' in generator list");
  return out;
}

std::vector<Symmetry> symmetries_of(const std::vector<NamedGenerator>& gens) {
  std::vector<Symmetry> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.symmetry);
  return out;
}

std::vector<NamedGenerator> h_mm_generators() {
  std::vector<NamedGenerator> out;
  for (auto [i, j] : {RowCol{0, 1}, RowCol{0, 2}, RowCol{1, 2}}) {
    out.push_back(cells(call("swap_bands", {i, j}), swap_bands_cells(i, j)));
  }
  for (auto [i, j] : {RowCol{0, 1}, RowCol{0, 2}, RowCol{1, 2}}) {
    out.push_back(cells(call("swap_pillars", {i, j}), swap_pillars_cells(i, j)));
  }
  out.push_back(cells("transpose", transpose_cells()));
  out.push_back(cells("rot90", rot90_cells()));
  for (int b = 0; b < 3; ++b) {
    out.push_back(cells(call("swap_rows", {3 * b, 3 * b + 2}),
                        swap_rows_cells(3 * b, 3 * b + 2)));
  }
  for (int p = 0; p < 3; ++p) {
    out.push_back(cells(call("swap_cols", {3 * p, 3 * p + 2}),
                        swap_cols_cells(3 * p, 3 * p + 2)));
  }
  return out;
}

std::vector<NamedGenerator> h_gamma_generators() {
  std::vector<NamedGenerator> out;
  out.push_back(cells("transpose", transpose_cells()));
  for (int b = 0; b < 3; ++b) {
    for (auto [i, j] : {RowCol{0, 1}, RowCol{0, 2}, RowCol{1, 2}}) {
      out.push_back(cells(call("swap_rows", {3 * b + i, 3 * b + j}),
                          swap_rows_cells(3 * b + i, 3 * b + j)));
    }
  }
  for (int p = 0; p < 3; ++p) {
    for (auto [i, j] : {RowCol{0, 1}, RowCol{0, 2}, RowCol{1, 2}}) {
      out.push_back(cells(call("swap_cols", {3 * p + i, 3 * p + j}),
                          swap_cols_cells(3 * p + i, 3 * p + j)));
    }
  }
  out.push_back(cells("swap_bands(1,2)", swap_bands_cells(1, 2)));
  out.push_back(cells("swap_pillars(1,2)", swap_pillars_cells(1, 2)));
  return out;
}

std::vector<NamedGenerator> h9_generators() {
  std::vector<NamedGenerator> out;
  for (int b = 0; b < 3; ++b) {
    for (auto [i, j] : {RowCol{0, 1}, RowCol{0, 2}, RowCol{1, 2}}) {
      out.push_back(cells(call("swap_rows", {3 * b + i, 3 * b + j}),
                          swap_rows_cells(3 * b + i, 3 * b + j)));
    }
  }
  for (int p = 0; p < 3; ++p) {
    for (auto [i, j] : {RowCol{0, 1}, RowCol{0, 2}, RowCol{1, 2}}) {
      out.push_back(cells(call("swap_cols", {3 * p + i, 3 * p + j}),
                          swap_cols_cells(3 * p + i, 3 * p + j)));
    }
  }
  for (auto [i, j] : {RowCol{0, 1}, RowCol{0, 2}, RowCol{1, 2}}) {
    out.push_back(cells(call("swap_bands", {i, j}), swap_bands_cells(i, j)));
  }
  for (auto [i, j] : {RowCol{0, 1}, RowCol{0, 2}, RowCol{1, 2}}) {
    out.push_back(cells(call("swap_pillars", {i, j}), swap_pillars_cells(i, j)));
  }
  out.push_back(cells("transpose", transpose_cells()));
  return out;
}

std::vector<NamedGenerator> g_k_generators() {
  std::vector<NamedGenerator> out;
  out.push_back(cells("transpose", transpose_cells()));
  for (auto [i, j] : {RowCol{0, 1}, RowCol{0, 2}, RowCol{1, 2}}) {
    out.push_back(cells(call("swap_bands", {i, j}), swap_bands_cells(i, j)));
  }
  for (auto [i, j] : {RowCol{0, 1}, RowCol{0, 2}, RowCol{1, 2}}) {
    out.push_back(cells(call("swap_pillars", {i, j}), swap_pillars_cells(i, j)));
  }
  for (int b = 0; b < 3; ++b) {
    out.push_back(cells(call("cycle_rows", {b}), cycle_rows_cells(b)));
  }
  for (int p = 0; p < 3; ++p) {
    out.push_back(cells(call("cycle_cols", {p}), cycle_cols_cells(p)));
  }
  for (int f0 = 0; f0 < 3; ++f0) {
    for (int f1 = 0; f1 < 3; ++f1) {
      for (int f2 = 0; f2 < 3; ++f2) {
        out.push_back(cells(call("triple_rows", {f0, f1, f2}),
                            triple_rows_cells(f0, f1, f2)));
      }
    }
  }
  for (int f0 = 0; f0 < 3; ++f0) {
    for (int f1 = 0; f1 < 3; ++f1) {
      for (int f2 = 0; f2 < 3; ++f2) {
        out.push_back(cells(call("triple_cols", {f0, f1, f2}),
                            triple_cols_cells(f0, f1, f2)));
      }
    }
  }
  out.push_back(digits("(01)", DigitPermutation::from_cycles("(01)")));
  out.push_back(digits("(012345678)", DigitPermutation::from_cycles("(012345678)")));
  return out;
}

std::vector<NamedGenerator> s_mm_generators() {
  return {digits("rho", rho()), digits("mu(4,0)", mu(4, 0)),
          digits("mu(5,3)", mu(5, 3)), digits("mu(5,6)", mu(5, 6))};
}

PermGroup s_mm_elements() {
  std::vector<Symmetry> formula;
  const Symmetry r = Symmetry::of_digits(rho());
  for (int k : {1, 2, 4, 5, 7, 8}) {
    for (int l : {0, 3, 6}) {
      Symmetry m = Symmetry::of_digits(mu(k, l));
      formula.push_back(m);
      formula.push_back(compose(r, m));
    }
  }
  PermGroup generated = PermGroup::closure(symmetries_of(s_mm_generators()));
  std::set<Symmetry> a(formula.begin(), formula.end());
  std::set<Symmetry> b(generated.elements().begin(), generated.elements().end());
  if (a.size() != formula.size() || a != b) {
    throw IntegrityError(
        "S_mm: the 36 formula relabelings differ from the generated closure");
  }
  std::sort(formula.begin(), formula.end());
  return PermGroup::from_elements(symmetries_of(s_mm_generators()), std::move(formula));
}

PermGroup s_sm_elements() {
  const std::vector<Block> blocks = semi_magic_blocks();
  std::vector<Symmetry> found;
  DigitPermutation::Images img;
  std::iota(img.begin(), img.end(), Digit{0});
  do {
    DigitPermutation p = DigitPermutation::from_images(img);
    if (maps_blocks_into(p, blocks)) found.push_back(Symmetry::of_digits(p));
  } while (std::next_permutation(img.begin(), img.end()));
  PermGroup unnamed = PermGroup::from_elements({}, found);
  return PermGroup::from_elements(symmetries_of(greedy_generators(unnamed)),
                                  std::move(found));
}

std::vector<NamedGenerator> s_sm_generators() {
  return greedy_generators(s_sm_group());
}

const PermGroup& h_mm_group() {
  static const PermGroup g = PermGroup::closure(symmetries_of(h_mm_generators()));
  return g;
}

const PermGroup& h_gamma_group() {
  static const PermGroup g = PermGroup::closure(symmetries_of(h_gamma_generators()));
  return g;
}

const PermGroup& h9_group() {
  static const PermGroup g = PermGroup::closure(symmetries_of(h9_generators()));
  return g;
}

const PermGroup& s_mm_group() {
  static const PermGroup g = s_mm_elements();
  return g;
}

const PermGroup& s_sm_group() {
  static const PermGroup g = s_sm_elements();
  return g;
}

}  // namespace mss
