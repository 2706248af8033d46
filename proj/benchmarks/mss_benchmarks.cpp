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

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "mss/catalog.hpp"
#include "mss/enumerate.hpp"
#include "mss/keedwell.hpp"
#include "mss/nests.hpp"

namespace mss {
namespace {

void BM_ClosureHmm(benchmark::State& state) {
  const auto gens = symmetries_of(h_mm_generators());
  for (auto _ : state) benchmark::DoNotOptimize(PermGroup::closure(gens).order());
}
BENCHMARK(BM_ClosureHmm)->Unit(benchmark::kMillisecond);

void BM_ClosureHGamma(benchmark::State& state) {
  const auto gens = symmetries_of(h_gamma_generators());
  for (auto _ : state) benchmark::DoNotOptimize(PermGroup::closure(gens).order());
}
BENCHMARK(BM_ClosureHGamma)->Unit(benchmark::kMillisecond)->Iterations(2);

void BM_EnumerateModularMagic(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_modular_magic([](const Board&) {}));
  }
}
BENCHMARK(BM_EnumerateModularMagic)->Unit(benchmark::kMillisecond);

void BM_EnumerateSemiMagicPartition(benchmark::State& state) {
  std::size_t p = 0;
  for (auto _ : state) {
    std::uint64_t n = 0;
    enumerate_partition(Variant::kSemiMagic, p, [&](const Board&) { ++n; });
    benchmark::DoNotOptimize(n);
    p = (p + 1) % partition_count(Variant::kSemiMagic);
  }
}
BENCHMARK(BM_EnumerateSemiMagicPartition);

std::vector<Board> sample(Variant v, std::size_t n) {
  std::vector<Board> all;
  for (std::size_t p = 0; all.empty() && p < partition_count(v); ++p) {
    enumerate_partition(v, p, [&](const Board& b) { all.push_back(b); });
  }
  std::mt19937_64 rng(1);
  std::vector<Board> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(all[rng() % all.size()]);
  return out;
}

void BM_CanonicalizeMm(benchmark::State& state) {
  const auto boards = sample(Variant::kModularMagic, 256);
  (void)canonicalize_mm(boards.front());
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize_mm(boards[i++ % boards.size()]));
}
BENCHMARK(BM_CanonicalizeMm);

void BM_CanonicalizeSm(benchmark::State& state) {
  const auto boards = sample(Variant::kSemiMagic, 256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize_sm(boards[i++ % boards.size()]));
}
BENCHMARK(BM_CanonicalizeSm);

void BM_CanonicalizeSmOrbitScan(benchmark::State& state) {
  const auto boards = sample(Variant::kSemiMagic, 64);
  (void)canonicalize_sm_orbit_scan(boards.front());
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonicalize_sm_orbit_scan(boards[i++ % boards.size()]));
  }
}
BENCHMARK(BM_CanonicalizeSmOrbitScan)->Unit(benchmark::kMicrosecond);

void BM_LinearityDegree(benchmark::State& state) {
  const auto boards = complete_standard_gnomon();
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(linearity_degree(boards[i++ % boards.size()]));
}
BENCHMARK(BM_LinearityDegree);

}  // namespace
}  // namespace mss

BENCHMARK_MAIN();
