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
// Exhaustive enumeration of modular-magic and semi-magic boards.
//
// Sequential enumerators visit boards in increasing row-major lexicographic
// order. Each search is also split into "partitions" (top-level branches,
// themselves in lexicographic order) so that work can be spread across
// threads; visiting partitions 0, 1, ... in turn reproduces the sequential
// order exactly.

#ifndef MSS_ENUMERATE_HPP_
#define MSS_ENUMERATE_HPP_

#include <atomic>
#include <bitset>
#include <cstdint>
#include <exception>
#include <functional>
#include <string_view>
#include <thread>
#include <vector>

#include "mss/board.hpp"

namespace mss {

enum class Variant { kModularMagic, kSemiMagic };

std::string_view variant_name(Variant v);  // "modular-magic" / "semi-magic"
// Accepts the names above plus the short forms "mm" / "sm".
Variant parse_variant(std::string_view text);

using BoardVisitor = std::function<void(const Board&)>;

// The 72 semi-magic blocks in lexicographic row-major order.
std::vector<Block> semi_magic_blocks();

// A board with some cells pinned; unpinned cells are ignored.
struct PartialBoard {
  Board board;
  std::bitset<kCells> fixed;
};

// Visits every board of the variant that agrees with `partial` on its fixed
// cells, in lexicographic order. Returns the number visited.
std::uint64_t complete(Variant v, const PartialBoard& partial,
                       const BoardVisitor& visit);

std::uint64_t enumerate_modular_magic(const BoardVisitor& visit);
std::uint64_t enumerate_semi_magic(const BoardVisitor& visit);
std::uint64_t enumerate(Variant v, const BoardVisitor& visit);

std::size_t partition_count(Variant v);
std::uint64_t enumerate_partition(Variant v, std::size_t part,
                                  const BoardVisitor& visit);

// Bands 0..2, pillar 0 of the standard semi-magic board [7,1].
PartialBoard standard_gnomon();
// The sixteen semi-magic completions of the standard gnomon, in
// lexicographic order.
std::vector<Board> complete_standard_gnomon();

// Worker count from MSS_THREADS, else the hardware concurrency (min 1).
unsigned default_threads();

// Runs the partitions of `v` on `threads` workers. Each worker owns a State
// and calls visit(state, board); the worker states are then folded together
// with merge(into, from) in worker order. Only mergeable (associative and
// commutative) reductions give thread-count-independent results.
template <class State, class Visit, class Merge>
State parallel_enumerate(Variant v, unsigned threads, Visit visit, Merge merge) {
  const std::size_t parts = partition_count(v);
  if (threads == 0) threads = 1;
  std::vector<State> states(threads);
  std::vector<std::exception_ptr> errors(threads);
  std::atomic<std::size_t> next{0};
  auto work = [&](unsigned w) {
    try {
      State& state = states[w];
      const BoardVisitor fn = [&](const Board& b) { visit(state, b); };
      for (std::size_t p = next++; p < parts; p = next++) {
        enumerate_partition(v, p, fn);
      }
    } catch (...) {
      errors[w] = std::current_exception();
      next = parts;
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  State out = std::move(states[0]);
  for (unsigned w = 1; w < threads; ++w) merge(out, states[w]);
  return out;
}

}  // namespace mss

#endif  // MSS_ENUMERATE_HPP_
