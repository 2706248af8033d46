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
// Nest graphs: one vertex per nest, and for every vertex R and generator s
// an edge R -> label(canonicalize(s . representative(R))). Weak components
// of the graph for a group's generators are the orbits of
// (nest-defining group) x (that group) on nests.

#ifndef MSS_NEST_GRAPH_HPP_
#define MSS_NEST_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mss/catalog.hpp"
#include "mss/nests.hpp"

namespace mss {

struct NestEdge {
  NestLabel from;
  NestLabel to;
  std::string generator;

  friend bool operator==(const NestEdge&, const NestEdge&) = default;
};

struct NestGraph {
  Variant variant = Variant::kModularMagic;
  std::vector<NestLabel> vertices;  // sorted
  std::vector<NestEdge> edges;      // by source vertex, then generator order
};

// `relabelings` and `physical` are applied alike; they are separate only to
// mirror how groups are described (relabeling part, extra physical part).
// Throws DomainError if a generator maps a representative out of the
// variant.
NestGraph build_nest_graph(Variant v, std::span<const NamedGenerator> relabelings,
                           std::span<const NamedGenerator> physical = {});

// Weakly connected components, each sorted, ordered by size and then by
// their smallest label.
std::vector<std::vector<NestLabel>> weak_components(const NestGraph& g);

// Deterministic Graphviz text: vertices in label order, then one edge
// statement per edge, self-loops included.
std::string to_dot(const NestGraph& g);

// True number of orbits of the full symmetry group: 2 (modular-magic) or
// 3 (semi-magic).
std::size_t expected_orbit_count(Variant v);

// Physical generators beyond the nest-defining group that, together with
// it, give the full physical group: none for modular-magic; the band 0/1
// and pillar 0/1 swaps for semi-magic.
std::vector<NamedGenerator> extra_physical_generators(Variant v);

bool completeness(Variant v, std::span<const NamedGenerator> relabelings,
                  std::span<const NamedGenerator> physical = {});

// Every orbit size divides the order of a complete group, so no complete
// group is smaller than the lcm of the orbit sizes. `minimal` means complete
// with order equal to that lcm (for modular-magic the lcm is the largest
// orbit).
struct MinimalityReport {
  std::uint64_t group_order = 0;
  std::uint64_t largest_orbit = 0;
  std::size_t component_count = 0;
  std::size_t expected_orbit_count = 0;
  bool complete = false;
  bool minimal = false;
  std::vector<std::uint64_t> orbit_sizes;  // of the full group, ascending
  std::uint64_t orbit_lcm = 0;
  bool order_multiple_of_lcm = false;
};

// Candidate group = phys_group x <relabelings>. `census` must be the census
// of `v`; it supplies nest sizes for the true orbit sizes. The nest graph
// uses the relabelings plus phys_group's generators as edges.
MinimalityReport minimality(Variant v, const PermGroup& phys_group,
                            std::span<const NamedGenerator> relabelings,
                            const Census& census);

}  // namespace mss

#endif  // MSS_NEST_GRAPH_HPP_
