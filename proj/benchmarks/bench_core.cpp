#include <benchmark/benchmark.h>

#include "moldsched/generator.hpp"
#include "moldsched/makespan.hpp"
#include "moldsched/welfare.hpp"

namespace {

using namespace moldsched;

TaskSet make_instance(int n, int delta, int k, int m, bool valued) {
    GeneratorSpec spec;
    spec.n = n;
    spec.delta = delta;
    spec.k = k;
    spec.m = m;
    spec.workload_min = rat(1);
    spec.workload_max = rat(100);
    spec.growth_min = 0;
    spec.growth_max = rat(1, 4);
    if (valued) spec.value_range = {{rat(1), rat(10)}};
    spec.seed = 42;
    return generate(spec);
}

void BM_SearchParams(benchmark::State& state) {
    int delta = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(search_params(delta));
}
BENCHMARK(BM_SearchParams)->Arg(5)->Arg(64)->Arg(101);

void BM_Classify(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    TaskSet tasks = make_instance(n, 10, 16, 1024, false);
    ParamSet params = search_params(tasks.delta);
    Rat d = makespan_lower_bound(tasks);
    for (auto _ : state) benchmark::DoNotOptimize(classify(tasks, d, params));
}
BENCHMARK(BM_Classify)->Arg(100)->Arg(1000);

void BM_ScheduleTasks(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    TaskSet tasks = make_instance(n, 10, 16, 1024, false);
    ParamSet params = search_params(tasks.delta);
    Rat d = makespan_lower_bound(tasks);
    for (auto _ : state) benchmark::DoNotOptimize(schedule_tasks(tasks, d, params));
}
BENCHMARK(BM_ScheduleTasks)->Arg(100)->Arg(1000);

void BM_MinimizeMakespan(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    TaskSet tasks = make_instance(n, 10, 16, 256, false);
    ParamSet params = search_params(tasks.delta);
    for (auto _ : state)
        benchmark::DoNotOptimize(minimize_makespan(tasks, params, rat(1, 100)));
}
BENCHMARK(BM_MinimizeMakespan)->Arg(50)->Arg(200);

void BM_MaximizeWelfare(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    TaskSet tasks = make_instance(n, 10, 16, 256, true);
    ParamSet params = search_params(tasks.delta);
    Rat tau = makespan_lower_bound(tasks);
    for (auto _ : state)
        benchmark::DoNotOptimize(maximize_welfare(tasks, tau, params));
}
BENCHMARK(BM_MaximizeWelfare)->Arg(50)->Arg(200);

} // namespace

BENCHMARK_MAIN();
