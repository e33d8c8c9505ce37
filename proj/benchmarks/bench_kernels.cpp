// Copyright 2026 The Carpenter Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "carpenter/carpenter_synth.hpp"
#include "carpenter/kadison_flow.hpp"
#include "carpenter/random.hpp"
#include "carpenter/strategy.hpp"
#include "carpenter/walsh.hpp"

namespace carpenter {
namespace {

// Arg: level of the matrix being conjugated.
void BM_ConjugateByW(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  Rng rng(1);
  CMatrix x = random_general(Level{level}, rng);
  for (auto _ : state) {
    conjugate_by_w_inplace(x, level - 1);
    benchmark::DoNotOptimize(x.data().data());
  }
  state.SetComplexityN(static_cast<benchmark::IterationCount>(x.size()));
}
BENCHMARK(BM_ConjugateByW)->DenseRange(4, 11)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);

// Arg: level of the step output.
void BM_Step(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  Rng rng(2);
  const CMatrix a = random_general(Level{level - 1}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(step(a));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(4 * a.size()));
}
BENCHMARK(BM_Step)->DenseRange(4, 11)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);

// Arg: target length N.
void BM_HornProjection(benchmark::State& state) {
  Rng rng(3);
  const auto target =
      DiagonalTarget::make(random_feasible_target(static_cast<std::size_t>(state.range(0)), rng));
  for (auto _ : state) benchmark::DoNotOptimize(horn_projection(target));
}
BENCHMARK(BM_HornProjection)->RangeMultiplier(4)->Range(4, 256)->Unit(benchmark::kMillisecond);

// Arg: level of the chain links being aligned.
void BM_PhaseAlign(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Profile g = parse_profile("square").g;
  const CMatrix prev = to_complex(horn_projection(DiagonalTarget::make(discretize(g, k - 1).values)).p);
  const CMatrix a = to_complex(horn_projection(DiagonalTarget::make(discretize(g, k).values)).p);
  const CMatrix target = embed(prev);
  for (auto _ : state) benchmark::DoNotOptimize(phase_align(a, target));
}
BENCHMARK(BM_PhaseAlign)->DenseRange(2, 7)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace carpenter

BENCHMARK_MAIN();
