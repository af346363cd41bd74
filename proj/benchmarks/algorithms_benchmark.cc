// Copyright 2026 The Semistream Authors.
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

#include <benchmark/benchmark.h>

#include "semistream/algorithms.h"
#include "semistream/generators.h"
#include "semistream/oracle.h"
#include "semistream/random.h"

namespace semistream {
namespace {

struct Instance {
  BipartiteGraph graph;
  ArrivalOrder order;
};

Instance random_instance(std::size_t n) {
  BipartiteGraph g = gen_perfect_plus_noise(n, 8, 17);
  ArrivalOrder order = uniform_order(g.num_edges(), 23);
  return {std::move(g), std::move(order)};
}

template <typename Fn>
void run_over_stream(benchmark::State& state, Fn fn) {
  const Instance inst = random_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    StreamSource src(inst.graph, inst.order);
    benchmark::DoNotOptimize(fn(src));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(inst.graph.num_edges()));
}

void BM_Greedy(benchmark::State& state) {
  run_over_stream(state, [](StreamSource& src) { return greedy(src).size(); });
}
BENCHMARK(BM_Greedy)->Arg(1 << 10)->Arg(1 << 14);

void BM_Semi(benchmark::State& state) {
  run_over_stream(state,
                  [](StreamSource& src) { return semi(src, 3).size(); });
}
BENCHMARK(BM_Semi)->Arg(1 << 10)->Arg(1 << 14);

void BM_OnePass(benchmark::State& state) {
  run_over_stream(state, [](StreamSource& src) {
    return one_pass_random_order(src).size();
  });
}
BENCHMARK(BM_OnePass)->Arg(1 << 10)->Arg(1 << 14);

void BM_TwoPassRandomized(benchmark::State& state) {
  run_over_stream(state, [](StreamSource& src) {
    return two_pass_randomized(src, kDefaultSampleProbability, 5).size();
  });
}
BENCHMARK(BM_TwoPassRandomized)->Arg(1 << 10)->Arg(1 << 14);

void BM_TwoPassDeterministic(benchmark::State& state) {
  run_over_stream(state, [](StreamSource& src) {
    return two_pass_deterministic(src).size();
  });
}
BENCHMARK(BM_TwoPassDeterministic)->Arg(1 << 10)->Arg(1 << 14);

void BM_MaxMatching(benchmark::State& state) {
  const Instance inst = random_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_matching(inst.graph).size());
  }
}
BENCHMARK(BM_MaxMatching)->Arg(1 << 10)->Arg(1 << 13);

}  // namespace
}  // namespace semistream

BENCHMARK_MAIN();
