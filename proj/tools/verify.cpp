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

#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "mss/analysis.hpp"
#include "mss/catalog.hpp"
#include "mss/enumerate.hpp"
#include "mss/keedwell.hpp"
#include "mss/nest_graph.hpp"
#include "mss/nests.hpp"

namespace mss::cli {

namespace {

struct Outcome {
  std::string expected;
  std::string actual;
  bool pass = false;
};

Outcome equal(std::uint64_t expected, std::uint64_t actual) {
  return {std::to_string(expected), std::to_string(actual), expected == actual};
}

Outcome equal(const std::string& expected, const std::string& actual) {
  return {expected, actual, expected == actual};
}

template <class Range>
std::string braces(const Range& xs) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& x : xs) {
    if (!first) out << ',';
    out << x;
    first = false;
  }
  out << '}';
  return out.str();
}

std::vector<std::size_t> component_sizes(const NestGraph& g) {
  std::vector<std::size_t> out;
  for (const auto& c : weak_components(g)) out.push_back(c.size());
  return out;
}

std::string census_text(const Census& c) {
  std::vector<std::string> parts;
  for (const auto& [label, n] : c.counts) parts.push_back(label.to_string() + "=" + std::to_string(n));
  return braces(parts) + " total=" + std::to_string(c.total);
}

std::string minimality_text(const MinimalityReport& r) {
  std::ostringstream out;
  out << "order=" << r.group_order << " lcm=" << r.orbit_lcm
      << " largest=" << r.largest_orbit << " complete=" << r.complete
      << " minimal=" << r.minimal;
  return out.str();
}

std::string divisibility_text(const std::vector<std::uint64_t>& sizes, std::uint64_t order) {
  bool all = std::all_of(sizes.begin(), sizes.end(),
                         [&](std::uint64_t s) { return s != 0 && order % s == 0; });
  return braces(sizes) + (all ? " all divide " : " not all divide ") + std::to_string(order);
}

std::string format_matrix(const ExponentMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < 3; ++i) {
    out << (i ? ",[" : "[") << int(m[i][0]) << ',' << int(m[i][1]) << ',' << int(m[i][2]) << ']';
  }
  out << ']';
  return out.str();
}

Board random_board(std::mt19937_64& rng) {
  Board b;
  std::uniform_int_distribution<int> digit(0, kDigits - 1);
  for (int k = 0; k < kCells; ++k) b[k] = static_cast<Digit>(digit(rng));
  return b;
}

Symmetry random_symmetry(std::mt19937_64& rng) {
  CellPermutation::Images cells;
  DigitPermutation::Images digits;
  std::iota(cells.begin(), cells.end(), std::uint8_t{0});
  std::iota(digits.begin(), digits.end(), Digit{0});
  std::shuffle(cells.begin(), cells.end(), rng);
  std::shuffle(digits.begin(), digits.end(), rng);
  return {CellPermutation::from_images(cells), DigitPermutation::from_images(digits)};
}

template <class T>
const T& pick(const std::vector<T>& xs, std::mt19937_64& rng) {
  return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
}

class Runner {
 public:
  Runner(const VerifyOptions& options, VerifyReport& report)
      : options_(options), report_(report) {}

  template <class F>
  void run(std::string name, F f) {
    Check check;
    check.name = std::move(name);
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = f();
      check.expected = std::move(o.expected);
      check.actual = std::move(o.actual);
      check.pass = o.pass;
    } catch (const std::exception& e) {
      check.actual = std::string("error: ") + e.what();
      check.pass = false;
    }
    check.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (options_.on_check) options_.on_check(check);
    report_.checks.push_back(std::move(check));
  }

 private:
  const VerifyOptions& options_;
  VerifyReport& report_;
};

void general_checks(const VerifyOptions& opt, Runner& run) {
  run.run("action_axioms", [&] {
    std::mt19937_64 rng(opt.seed);
    std::size_t failures = 0;
    for (std::size_t i = 0; i < opt.samples; ++i) {
      const Board b = random_board(rng);
      const Symmetry s1 = random_symmetry(rng), s2 = random_symmetry(rng);
      if (act(Symmetry::identity(), b) != b) ++failures;
      if (act(compose(s2, s1), b) != act(s2, act(s1, b))) ++failures;
      if (!compose(s1, inverse(s1)).is_identity()) ++failures;
    }
    return equal(0, failures);
  });
  run.run("closure_determinism", [&] {
    std::mt19937_64 rng(opt.seed + 1);
    auto gens = symmetries_of(h_mm_generators());
    PermGroup a = PermGroup::closure(gens);
    std::shuffle(gens.begin(), gens.end(), rng);
    PermGroup b = PermGroup::closure(gens);
    auto ea = a.elements(), eb = b.elements();
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    return equal("same element set, order 4608",
                 std::string(ea == eb ? "same" : "different") + " element set, order " +
                     std::to_string(b.order()));
  });
  run.run("g9_certificate", [&] {
    G9Certificate c =
        g9_minimality_certificate(sudoku_board_count(), sudoku_orbit_count(), g9_order());
    return equal("floor=1218935174261 bound_holds=1",
                 "floor=" + c.average_orbit_floor.str() +
                     " bound_holds=" + std::to_string(c.bound_holds));
  });
}

void modular_magic_checks(const VerifyOptions& opt, Runner& run) {
  run.run("h_mm_order", [] { return equal(4608, h_mm_group().order()); });
  run.run("s_mm_order", [] { return equal(36, s_mm_elements().order()); });
  run.run("h_mm_x_s_mm_order",
          [] { return equal(165888, direct_product_order(h_mm_group(), s_mm_group())); });
  run.run("rho_mu40_order", [] {
    return equal(6, PermGroup::closure(symmetries_of(parse_generator_list("rho,mu(4,0)"))).order());
  });

  std::vector<Board> boards;
  run.run("mm_board_count", [&] {
    enumerate_modular_magic([&](const Board& b) { boards.push_back(b); });
    return equal(32256, boards.size());
  });

  run.run("mm_two_equal_sweep", [&] {
    std::uint64_t ok = 0;
    for (const Board& b : boards) ok += check_two_equal(b);
    return equal(32256, ok);
  });

  Census census_mm;
  run.run("mm_census", [&] {
    census_mm = census(Variant::kModularMagic, opt.threads);
    return equal(
        "{[1,1]=1536,[1,2]=4608,[1,8]=4608,[2,1]=4608,[2,2]=1536,[2,7]=4608,[7,2]=4608,"
        "[7,5]=4608,[7,7]=1536} total=32256",
        census_text(census_mm));
  });

  run.run("mm_graph_rho_mu40", [] {
    NestGraph g = build_nest_graph(Variant::kModularMagic, parse_generator_list("rho,mu(4,0)"));
    return equal("{3,6}", braces(component_sizes(g)));
  });

  run.run("mm_minimality", [&] {
    MinimalityReport r = minimality(Variant::kModularMagic, h_mm_group(),
                                    parse_generator_list("rho,mu(4,0)"), census_mm);
    return equal("order=27648 lcm=27648 largest=27648 complete=1 minimal=1",
                 minimality_text(r));
  });

  run.run("mm_full_group_not_minimal", [&] {
    MinimalityReport r =
        minimality(Variant::kModularMagic, h_mm_group(), s_mm_generators(), census_mm);
    return equal("order=165888 lcm=27648 largest=27648 complete=1 minimal=0",
                 minimality_text(r));
  });

  run.run("mm_orbit_sizes", [&] {
    return equal("{4608,27648} all divide 165888",
                 divisibility_text(full_orbit_sizes(census_mm), full_group_order(Variant::kModularMagic)));
  });

  run.run("mm_label_invariance", [&] {
    std::mt19937_64 rng(opt.seed + 2);
    std::size_t failures = 0;
    for (std::size_t i = 0; i < opt.samples; ++i) {
      const Board& b = pick(boards, rng);
      const Symmetry& h = pick(h_mm_group().elements(), rng);
      if (canonicalize_mm(act(h, b)).label != canonicalize_mm(b).label) ++failures;
    }
    return equal(0, failures);
  });
}

void semi_magic_checks(const VerifyOptions& opt, Runner& run) {
  run.run("h_gamma_order", [] { return equal(373248, h_gamma_group().order()); });
  run.run("s_sm_order", [] { return equal(72, s_sm_group().order()); });
  run.run("h9_order", [] { return equal(3359232, h9_group().order()); });
  run.run("g_sm_order",
          [] { return equal(241864704, direct_product_order(h9_group(), s_sm_group())); });
  run.run("sm_block_count", [] { return equal(72, semi_magic_blocks().size()); });

  std::vector<Board> standard;
  run.run("sm_gnomon_completions", [&] {
    standard = complete_standard_gnomon();
    return equal(16, standard.size());
  });

  run.run("sm_board_count", [&] {
    auto n = parallel_enumerate<std::uint64_t>(
        Variant::kSemiMagic, opt.threads, [](std::uint64_t& s, const Board&) { ++s; },
        [](std::uint64_t& a, std::uint64_t b) { a += b; });
    return equal(5971968, n);
  });

  Census census_sm;
  run.run("sm_census", [&] {
    census_sm = census(Variant::kSemiMagic, opt.threads);
    bool ok = census_sm.counts.size() == 16 && census_sm.total == 5971968 &&
              std::all_of(census_sm.counts.begin(), census_sm.counts.end(),
                          [](const auto& kv) { return kv.second == 373248; });
    return Outcome{"16 labels x 373248, total 5971968", census_text(census_sm), ok};
  });

  run.run("sm_oracle_agreement", [&] {
    std::mt19937_64 rng(opt.seed + 3);
    std::size_t disagreements = 0;
    for (std::size_t i = 0; i < opt.oracle_samples; ++i) {
      const Board b = act(pick(h_gamma_group().elements(), rng), pick(standard, rng));
      const Canonical fast = canonicalize_sm(b);
      const Canonical slow = canonicalize_sm_orbit_scan(b);
      if (fast.label != slow.label || fast.board != slow.board) ++disagreements;
    }
    return Outcome{"0 disagreements on " + std::to_string(opt.oracle_samples),
                   std::to_string(disagreements) + " disagreements on " +
                       std::to_string(opt.oracle_samples),
                   disagreements == 0};
  });

  run.run("sm_graph_uv", [] {
    NestGraph g = build_nest_graph(Variant::kSemiMagic,
                                   parse_generator_list("swap_bands(0,1),swap_pillars(0,1)"));
    return equal("{1,3,3,9}", braces(component_sizes(g)));
  });

  run.run("sm_graph_uv_mu", [] {
    NestGraph g = build_nest_graph(
        Variant::kSemiMagic,
        parse_generator_list("swap_bands(0,1),swap_pillars(0,1),(12)(45)(78)"));
    return equal("{1,6,9}", braces(component_sizes(g)));
  });

  run.run("sm_minimality", [&] {
    MinimalityReport r = minimality(Variant::kSemiMagic, h9_group(),
                                    parse_generator_list("(12)(45)(78)"), census_sm);
    return equal("order=6718464 lcm=6718464 largest=3359232 complete=1 minimal=1",
                 minimality_text(r));
  });

  run.run("sm_orbit_sizes", [&] {
    return equal("{373248,2239488,3359232} all divide 241864704",
                 divisibility_text(full_orbit_sizes(census_sm), full_group_order(Variant::kSemiMagic)));
  });

  run.run("keedwell_standard_boards", [&] {
    std::size_t n = 0;
    for (const Board& b : standard) n += keedwell_decompose(b).has_value();
    return equal(16, n);
  });

  run.run("keedwell_degree_by_orbit", [] {
    NestGraph g = build_nest_graph(
        Variant::kSemiMagic,
        parse_generator_list("swap_bands(0,1),swap_pillars(0,1),(12)(45)(78)"));
    std::vector<std::string> parts;
    for (const auto& component : weak_components(g)) {
      std::map<int, std::size_t> degrees;
      for (const NestLabel& l : component) {
        auto d = linearity_degree(representative(l));
        ++degrees[d ? *d : -1];
      }
      std::vector<std::string> entries;
      for (const auto& [d, n] : degrees) {
        entries.push_back("deg" + std::to_string(d) + "x" + std::to_string(n));
      }
      parts.push_back(braces(entries));
    }
    return equal("{{deg2x1},{deg1x6},{deg0x9}}", braces(parts));
  });

  run.run("keedwell_7_1_matrices", [] {
    auto dec = keedwell_decompose(representative(parse_label(Variant::kSemiMagic, "[7,1]")));
    if (!dec) return Outcome{"decomposes", "not Keedwell", false};
    return equal("c=[[0,1,2],[0,2,1],[0,1,2]] d=[[0,0,0],[1,1,1],[2,2,2]]",
                 "c=" + format_matrix(dec->exponents.c) + " d=" + format_matrix(dec->exponents.d));
  });

  run.run("keedwell_g_k_invariance", [&] {
    std::size_t failures = 0, cases = 0;
    for (const NamedGenerator& g : g_k_generators()) {
      for (const Board& b : standard) {
        ++cases;
        auto before = linearity_degree(b);
        auto after = linearity_degree(act(g.symmetry, b));
        if (!after || after != before) ++failures;
      }
    }
    return Outcome{"0 failures", std::to_string(failures) + " failures in " +
                                     std::to_string(cases) + " cases",
                   failures == 0};
  });

  run.run("keedwell_tau_relations", [] {
    std::size_t failures = 0;
    static constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const Block& k : semi_magic_blocks()) {
      for (const auto& p : kPairs) {
        auto tau = [&](const Block& b) { return swap_block_cols(b, p[0], p[1]); };
        if (tau(apply_alpha(k, 1)) != apply_alpha(tau(k), 1)) ++failures;
        if (tau(apply_beta(k, 1)) != apply_beta(tau(k), 2)) ++failures;
      }
    }
    return equal(0, failures);
  });

  run.run("sm_label_invariance", [&] {
    std::mt19937_64 rng(opt.seed + 4);
    const auto& hg = h_gamma_group().elements();
    std::size_t failures = 0;
    for (std::size_t i = 0; i < opt.samples; ++i) {
      const Board b = act(pick(hg, rng), pick(standard, rng));
      const Symmetry& h = pick(hg, rng);
      if (canonicalize_sm(act(h, b)).label != canonicalize_sm(b).label) ++failures;
    }
    return equal(0, failures);
  });
}

}  // namespace

bool VerifyReport::overall() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

VerifyReport verify(const VerifyOptions& options) {
  VerifyReport report;
  Runner run(options, report);
  if (options.general) general_checks(options, run);
  if (options.modular_magic) modular_magic_checks(options, run);
  if (options.semi_magic) semi_magic_checks(options, run);
  return report;
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const Check& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"pass", c.pass},
                      {"seconds", c.seconds}});
  }
  return {{"checks", checks}, {"overall", report.overall()}};
}

}  // namespace mss::cli
