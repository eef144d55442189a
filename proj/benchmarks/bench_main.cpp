#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "uxagent/agent.hpp"
#include "uxagent/engine.hpp"
#include "uxagent/ensemble.hpp"
#include "uxagent/level.hpp"
#include "uxagent/simulation.hpp"

namespace {

using namespace uxagent;

void BM_VisibleCells(benchmark::State& state) {
  const Level& level = builtin(MapId::M4);
  const std::vector<bool> open(level.objects().size(), false);
  const int radius = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(visible_cells(level, open, level.spawn(), radius));
  }
}
BENCHMARK(BM_VisibleCells)->Arg(3)->Arg(6)->Arg(12);

// Plans across the fully explored map from the end of a goal-less run.
void BM_PlanPath(benchmark::State& state) {
  const Level level = without_goal(builtin(MapId::M4));
  Simulation sim(level, {});
  while (sim.advance()) {
  }
  const GridPos from = level.spawn();
  const GridPos to = sim.world().agent_pos();
  for (auto _ : state) {
    benchmark::DoNotOptimize(plan_path(sim.model(), from, to));
  }
}
BENCHMARK(BM_PlanPath);

void BM_FullRun(benchmark::State& state) {
  const MapId id = kAllMaps[state.range(0)];
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_simulation(builtin(id), {}));
  }
  state.SetLabel(std::string(to_string(id)));
}
BENCHMARK(BM_FullRun)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Ensemble(benchmark::State& state) {
  std::vector<std::uint64_t> seeds(32);
  std::iota(seeds.begin(), seeds.end(), 1);
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    const auto runs = run_many(builtin(MapId::M4), {}, seeds, "M4", workers);
    benchmark::DoNotOptimize(aggregate(runs, AffectEnvelope::vacuous()));
  }
}
BENCHMARK(BM_Ensemble)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
