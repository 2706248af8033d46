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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mss/analysis.hpp"
#include "mss/board_io.hpp"
#include "mss/catalog.hpp"
#include "mss/errors.hpp"
#include "mss/keedwell.hpp"
#include "mss/nest_graph.hpp"
#include "mss/nests.hpp"
#include "verify.hpp"

namespace mss::cli {

namespace {

using nlohmann::json;

struct Globals {
  unsigned threads = 0;
  bool quiet = false;
  std::string json_path;
};

// Raised for bad flag values that CLI11 cannot validate on its own.
class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ofstream open_output(const std::string& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream f(path, mode);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  return f;
}

// Writes `j` to the --json file if one was given, otherwise to `out`.
void emit_json(const Globals& g, const json& j, std::ostream& out) {
  if (g.json_path.empty()) {
    out << j.dump(2) << '\n';
  } else {
    auto f = open_output(g.json_path);
    f << j.dump(2) << '\n';
  }
}

json matrix_json(const ExponentMatrix& m) {
  json rows = json::array();
  for (const auto& row : m) rows.push_back({row[0], row[1], row[2]});
  return rows;
}

json names_json(const std::vector<NamedGenerator>& gens) {
  json names = json::array();
  for (const auto& g : gens) names.push_back(g.name);
  return names;
}

json census_json(const Census& c) {
  json nests = json::array();
  for (const auto& [label, n] : c.counts) {
    nests.push_back({{"label", label.to_string()}, {"count", n}});
  }
  return {{"variant", variant_name(c.variant)}, {"total", c.total}, {"nests", nests}};
}

int cmd_enumerate(const Globals& g, Variant v, const std::string& out_path,
                  const std::string& format, bool count_only, std::ostream& out) {
  std::uint64_t count = 0;
  if (count_only) {
    count = parallel_enumerate<std::uint64_t>(
        v, g.threads, [](std::uint64_t& n, const Board&) { ++n; },
        [](std::uint64_t& a, std::uint64_t b) { a += b; });
  } else if (format == "binary") {
    if (out_path.empty()) throw UsageError("--format binary requires --out FILE");
    auto f = open_output(out_path, std::ios::out | std::ios::binary | std::ios::trunc);
    BinaryBoardWriter writer(f);
    count = enumerate(v, [&](const Board& b) { writer.add(b); });
    writer.finish();
  } else if (out_path.empty()) {
    count = enumerate(v, [&](const Board& b) { out << format_board(b) << '\n'; });
  } else {
    auto f = open_output(out_path);
    count = enumerate(v, [&](const Board& b) { f << format_board(b) << '\n'; });
  }
  if (!g.quiet && (count_only || !out_path.empty())) {
    out << variant_name(v) << ' ' << count << '\n';
  }
  if (!g.json_path.empty()) {
    json j = {{"variant", variant_name(v)}, {"count", count}};
    if (!out_path.empty() && !count_only) j["out"] = out_path;
    emit_json(g, j, out);
  }
  return kExitOk;
}

int cmd_census(const Globals& g, Variant v, std::ostream& out) {
  const Census c = census(v, g.threads);
  if (!g.quiet) {
    for (const auto& [label, n] : c.counts) out << label.to_string() << ' ' << n << '\n';
    out << "total " << c.total << '\n';
  }
  if (!g.json_path.empty()) emit_json(g, census_json(c), out);
  return kExitOk;
}

int cmd_nest_graph(const Globals& g, Variant v, const std::string& relabelings,
                   const std::string& physical, const std::string& dot_path,
                   const std::string& report_path, std::ostream& out) {
  const auto rel = parse_generator_list(relabelings);
  const auto phys = parse_generator_list(physical);
  const NestGraph graph = build_nest_graph(v, rel, phys);
  const std::string dot = to_dot(graph);
  if (dot_path.empty()) {
    out << dot;
  } else {
    open_output(dot_path) << dot;
  }

  const auto components = weak_components(graph);
  if (!g.quiet && !dot_path.empty()) {
    out << components.size() << " components:";
    for (const auto& c : components) out << ' ' << c.size();
    out << '\n';
  }
  if (report_path.empty()) return kExitOk;

  json comps = json::array();
  for (const auto& c : components) {
    json labels = json::array();
    for (const auto& l : c) labels.push_back(l.to_string());
    comps.push_back(labels);
  }
  const PermGroup& phys_group = v == Variant::kModularMagic ? h_mm_group() : h9_group();
  const MinimalityReport m = minimality(v, phys_group, rel, census(v, g.threads));
  json report = {
      {"variant", variant_name(v)},
      {"relabelings", names_json(rel)},
      {"physical", names_json(phys)},
      {"components", comps},
      {"component_count", components.size()},
      {"expected_orbit_count", expected_orbit_count(v)},
      {"complete", components.size() == expected_orbit_count(v)},
      {"minimality",
       {{"physical_group_order", phys_group.order()},
        {"group_order", m.group_order},
        {"largest_orbit", m.largest_orbit},
        {"orbit_sizes", m.orbit_sizes},
        {"orbit_lcm", m.orbit_lcm},
        {"order_multiple_of_lcm", m.order_multiple_of_lcm},
        {"component_count", m.component_count},
        {"complete", m.complete},
        {"minimal", m.minimal}}},
  };
  open_output(report_path) << report.dump(2) << '\n';
  return kExitOk;
}

int cmd_keedwell(const Globals& g, const std::string& text, std::ostream& out) {
  const Board b = parse_board(text);
  const auto dec = keedwell_decompose(b);
  json j = {{"keedwell", dec.has_value()}, {"c", nullptr}, {"d", nullptr}, {"degree", nullptr}};
  if (dec) {
    j["c"] = matrix_json(dec->exponents.c);
    j["d"] = matrix_json(dec->exponents.d);
    j["degree"] = static_cast<int>(is_quasi_linear(dec->exponents.c)) +
                  static_cast<int>(is_quasi_linear(dec->exponents.d));
  }
  emit_json(g, j, out);
  return kExitOk;
}

int cmd_minimality_g9(const Globals& g, const std::string& total, const std::string& orbits,
                      const std::string& order, std::ostream& out) {
  const G9Certificate c = g9_minimality_certificate(
      total.empty() ? sudoku_board_count() : parse_big_int(total),
      orbits.empty() ? sudoku_orbit_count() : parse_big_int(orbits),
      order.empty() ? g9_order() : parse_big_int(order));
  emit_json(g,
            {{"total_boards", c.total_boards.str()},
             {"orbit_count", c.orbit_count.str()},
             {"group_order", c.group_order.str()},
             {"average_orbit_floor", c.average_orbit_floor.str()},
             {"bound_holds", c.bound_holds}},
            out);
  return c.bound_holds ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const Globals& g, const std::string& variant, bool all, std::size_t samples,
               std::size_t oracle_samples, std::uint64_t seed, std::ostream& out,
               std::ostream& err) {
  VerifyOptions opt;
  if (all || variant.empty()) {
    opt.general = opt.modular_magic = opt.semi_magic = true;
  } else {
    (parse_variant(variant) == Variant::kModularMagic ? opt.modular_magic : opt.semi_magic) =
        true;
  }
  opt.threads = g.threads;
  opt.samples = samples;
  opt.oracle_samples = oracle_samples;
  opt.seed = seed;
  if (!g.quiet) {
    opt.on_check = [&err](const Check& c) {
      err << (c.pass ? "PASS " : "FAIL ") << c.name << ": expected " << c.expected
          << ", actual " << c.actual << " (" << std::fixed << std::setprecision(2) << c.seconds
          << " s)\n";
    };
  }
  const VerifyReport report = verify(opt);
  emit_json(g, to_json(report), out);
  return report.overall() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Magic Sudoku variants: enumeration, nests, symmetry groups", "mss"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  g.threads = default_threads();
  app.add_option("--threads", g.threads, "Worker threads (default: MSS_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--quiet", g.quiet, "Suppress human-readable output");
  app.add_option("--json", g.json_path, "Write the JSON result to FILE");

  const std::map<std::string, std::string> variants = {
      {"modular-magic", "modular-magic"}, {"semi-magic", "semi-magic"},
      {"mm", "modular-magic"},           {"sm", "semi-magic"}};
  std::string variant;

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate every board of a variant");
  std::string out_path, format = "text";
  bool count_only = false;
  enumerate_cmd->add_option("--variant", variant)->required()->transform(CLI::CheckedTransformer(variants));
  enumerate_cmd->add_option("--out", out_path, "Board file to write");
  enumerate_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "binary"}));
  enumerate_cmd->add_flag("--count-only", count_only, "Only count the boards");

  auto* census_cmd = app.add_subcommand("census", "Count boards per nest");
  census_cmd->add_option("--variant", variant)->required()->transform(CLI::CheckedTransformer(variants));

  auto* graph_cmd = app.add_subcommand("nest-graph", "Build a generator-labelled nest graph");
  std::string relabelings, physical, dot_path, report_path;
  graph_cmd->add_option("--variant", variant)->required()->transform(CLI::CheckedTransformer(variants));
  graph_cmd->add_option("--relabelings", relabelings, "Comma-separated generator tokens");
  graph_cmd->add_option("--physical", physical, "Extra physical generator tokens");
  graph_cmd->add_option("--dot", dot_path, "Graphviz output file (default: stdout)");
  graph_cmd->add_option("--report", report_path, "Write a components/minimality JSON report");

  auto* keedwell_cmd = app.add_subcommand("keedwell", "Keedwell decomposition of a board");
  std::string board_text;
  keedwell_cmd->add_option("--board", board_text, "81 digits 0-8, row-major")->required();

  auto* g9_cmd = app.add_subcommand("minimality-g9", "Average-orbit certificate for G_9");
  std::string total, orbits, order;
  g9_cmd->add_option("--total", total, "Number of boards (default: all Sudoku boards)");
  g9_cmd->add_option("--orbits", orbits, "Number of orbits");
  g9_cmd->add_option("--group-order", order, "Group order");

  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
  bool all = false;
  std::size_t samples = 1000, oracle_samples = 10000;
  std::uint64_t seed = VerifyOptions{}.seed;
  auto* variant_opt = verify_cmd->add_option("--variant", variant)
                          ->transform(CLI::CheckedTransformer(variants));
  verify_cmd->add_flag("--all", all, "Run every check")->excludes(variant_opt);
  verify_cmd->add_option("--samples", samples, "Random samples per property check");
  verify_cmd->add_option("--oracle-samples", oracle_samples, "Boards for the oracle comparison");
  verify_cmd->add_option("--seed", seed, "Random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*enumerate_cmd) {
      return cmd_enumerate(g, parse_variant(variant), out_path, format, count_only, out);
    }
    if (*census_cmd) return cmd_census(g, parse_variant(variant), out);
    if (*graph_cmd) {
      return cmd_nest_graph(g, parse_variant(variant), relabelings, physical, dot_path,
                            report_path, out);
    }
    if (*keedwell_cmd) return cmd_keedwell(g, board_text, out);
    if (*g9_cmd) return cmd_minimality_g9(g, total, orbits, order, out);
    if (*verify_cmd) {
      return cmd_verify(g, variant, all, samples, oracle_samples, seed, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DigitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace mss::cli
