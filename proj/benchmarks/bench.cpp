/* Copyright 2026 The stringcone Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include <benchmark/benchmark.h>

#include "stringcone/polytopes.hpp"

using namespace stringcone;

static void BM_ReducedWords(benchmark::State& state) {
  const LieType t{Family::C, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_reduced_words(t).size());
}
BENCHMARK(BM_ReducedWords)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_TypeAWords(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_reduced_words(LieType{Family::A, 4}).size());
}
BENCHMARK(BM_TypeAWords)->Unit(benchmark::kMillisecond);

static void BM_Paths(benchmark::State& state) {
  const SympWiringDiagram d(LieType{Family::C, 3}, word_jC(3));
  for (auto _ : state) benchmark::DoNotOptimize(symp_paths(d).size());
}
BENCHMARK(BM_Paths);

static void BM_Facets(benchmark::State& state) {
  const LieType t{Family::C, 3};
  for (auto _ : state) benchmark::DoNotOptimize(irredundant_facets(t, word_jC(3)).facet_count());
}
BENCHMARK(BM_Facets)->Unit(benchmark::kMillisecond);

static void BM_GTFVector(benchmark::State& state) {
  const HRep h = gt_polytope_C(Weight::rho(LieType{Family::C, 3}), 3);
  for (auto _ : state) benchmark::DoNotOptimize(f_vector(h).size());
}
BENCHMARK(BM_GTFVector)->Unit(benchmark::kMillisecond);

static void BM_LatticePoints(benchmark::State& state) {
  const HRep h = dilate(gt_polytope_C(Weight::rho(LieType{Family::C, 3}), 3), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lattice_points(h));
}
BENCHMARK(BM_LatticePoints)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
