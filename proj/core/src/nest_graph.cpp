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

#include "mss/nest_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mss/analysis.hpp"
#include "mss/errors.hpp"

namespace mss {

namespace {

bool satisfies(Variant v, const Board& b) {
  return v == Variant::kModularMagic ? is_modular_magic(b) : is_semi_magic(b);
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::size_t vertex_index(const NestGraph& g, const NestLabel& l) {
  auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), l);
  if (it == g.vertices.end() || *it != l) {
    throw IntegrityError("nest graph: edge endpoint " + l.to_string() + " is not a vertex");
  }
  return static_cast<std::size_t>(it - g.vertices.begin());
}

std::uint64_t lcm_of(const std::vector<std::uint64_t>& xs) {
  std::uint64_t out = 1;
  for (std::uint64_t x : xs) out = std::lcm(out, x);
  return out;
}

}  // namespace

NestGraph build_nest_graph(Variant v, std::span<const NamedGenerator> relabelings,
                           std::span<const NamedGenerator> physical) {
  NestGraph g;
  g.variant = v;
  g.vertices = nest_labels(v);
  std::vector<const NamedGenerator*> gens;
  for (const auto& x : relabelings) gens.push_back(&x);
  for (const auto& x : physical) gens.push_back(&x);
  for (const NestLabel& from : g.vertices) {
    const Board rep = representative(from);
    for (const NamedGenerator* gen : gens) {
      Board image = act(gen->symmetry, rep);
      if (!satisfies(v, image)) {
        throw DomainError("generator " + gen->name + " maps nest " + from.to_string() +
                          " outside the " + std::string(variant_name(v)) + " boards");
      }
      g.edges.push_back({from, canonicalize(v, image).label, gen->name});
    }
  }
  return g;
}

std::vector<std::vector<NestLabel>> weak_components(const NestGraph& g) {
  DisjointSets sets(g.vertices.size());
  for (const NestEdge& e : g.edges) {
    sets.unite(vertex_index(g, e.from), vertex_index(g, e.to));
  }
  std::vector<std::vector<NestLabel>> out;
  std::vector<std::ptrdiff_t> slot(g.vertices.size(), -1);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    std::size_t root = sets.find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::ptrdiff_t>(out.size());
      out.emplace_back();
    }
    out[slot[root]].push_back(g.vertices[i]);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  return out;
}

std::string to_dot(const NestGraph& g) {
  std::ostringstream out;
  out << "digraph nests {\n";
  for (const NestLabel& v : g.vertices) out << "  \"" << v.to_string() << "\";\n";
  for (const NestEdge& e : g.edges) {
    out << "  \"" << e.from.to_string() << "\" -> \"" << e.to.to_string()
        << "\" [label=\"" << e.generator << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::size_t expected_orbit_count(Variant v) {
  return v == Variant::kModularMagic ? 2 : 3;
}

std::vector<NamedGenerator> extra_physical_generators(Variant v) {
  if (v == Variant::kModularMagic) return {};
  return {parse_generator("swap_bands(0,1)"), parse_generator("swap_pillars(0,1)")};
}

bool completeness(Variant v, std::span<const NamedGenerator> relabelings,
                  std::span<const NamedGenerator> physical) {
  return weak_components(build_nest_graph(v, relabelings, physical)).size() ==
         expected_orbit_count(v);
}

MinimalityReport minimality(Variant v, const PermGroup& phys_group,
                            std::span<const NamedGenerator> relabelings,
                            const Census& census) {
  if (census.variant != v) {
    throw DomainError("minimality: census is for a different variant");
  }
  MinimalityReport r;
  std::vector<NamedGenerator> rel(relabelings.begin(), relabelings.end());
  PermGroup rel_group = PermGroup::closure(symmetries_of(rel));
  r.group_order = direct_product_order(phys_group, rel_group);

  std::vector<NamedGenerator> phys;
  for (std::size_t i = 0; i < phys_group.generators().size(); ++i) {
    phys.push_back({"phys[" + std::to_string(i) + "]", phys_group.generators()[i]});
  }
  r.component_count = weak_components(build_nest_graph(v, rel, phys)).size();
  r.expected_orbit_count = expected_orbit_count(v);
  r.complete = r.component_count == r.expected_orbit_count;

  r.orbit_sizes = full_orbit_sizes(census);
  r.largest_orbit = r.orbit_sizes.empty() ? 0 : r.orbit_sizes.back();
  r.orbit_lcm = lcm_of(r.orbit_sizes);
  r.order_multiple_of_lcm = r.orbit_lcm != 0 && r.group_order % r.orbit_lcm == 0;
  r.minimal = r.complete && r.group_order == r.orbit_lcm;
  return r;
}

}  // namespace mss
