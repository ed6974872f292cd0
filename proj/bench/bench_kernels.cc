// Copyright 2026 The lanerouter Authors
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

// Serial reference kernels against their OpenMP counterparts, and the
// label-setting router against value iteration, on highway merge graphs.

#include <benchmark/benchmark.h>

#include <cmath>

#include "lanerouter/policy_sim.h"
#include "lanerouter/router.h"
#include "lanerouter/scenarios.h"
#include "lanerouter/value_iteration.h"

namespace lr = lanerouter;

namespace {

struct Instance {
  lr::LaneGraph graph;
  std::string goal;
  lr::SolveParams params;
};

Instance Merge(std::int64_t cells) {
  lr::MergeScenarioParams p;
  p.road_length = std::round(static_cast<double>(cells) / 3.0) * p.cell_length;
  p.merge_position = std::min(p.merge_position, p.road_length / 2.0);
  p.c_merge = 50.0;
  return {lr::GenHighwayMerge(p), lr::MergeGoal(p),
          lr::SolveParams::Make(0.01, 5.0)};
}

void BM_Dijkstra(benchmark::State& state) {
  const Instance in = Merge(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lr::Solve(in.graph, in.goal, in.params));
  }
  state.counters["cells"] = static_cast<double>(in.graph.size());
}

template <lr::SweepKernel kKernel>
void BM_ValueIteration(benchmark::State& state) {
  const Instance in = Merge(state.range(0));
  lr::VIConfig cfg;
  cfg.tolerance = 1e-8;
  std::uint64_t sweeps = 0;
  for (auto _ : state) {
    lr::Solution s = lr::ValueIterate(in.graph, in.goal, in.params, cfg, kKernel);
    sweeps = s.stats.vi_iterations;
    benchmark::DoNotOptimize(s);
  }
  state.counters["cells"] = static_cast<double>(in.graph.size());
  state.counters["sweeps"] = static_cast<double>(sweeps);
}

template <lr::TrialKernel kKernel>
void BM_EstimateCost(benchmark::State& state) {
  lr::MergeScenarioParams p;
  p.c_merge = 50.0;
  const lr::LaneGraph graph = lr::GenHighwayMerge(p);
  const lr::Solution s =
      lr::Solve(graph, lr::MergeGoal(p), lr::SolveParams::Make(0.01, 5.0));
  const lr::CellIndex start = graph.IndexOf("l0");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        lr::EstimateCost(graph, s, start, state.range(0), 1, {}, kKernel));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_Dijkstra)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ValueIteration<lr::SweepKernel::kSerial>)
    ->RangeMultiplier(4)->Range(1 << 10, 1 << 12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ValueIteration<lr::SweepKernel::kOpenMP>)
    ->RangeMultiplier(4)->Range(1 << 10, 1 << 12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EstimateCost<lr::TrialKernel::kSerial>)
    ->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EstimateCost<lr::TrialKernel::kOpenMP>)
    ->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
