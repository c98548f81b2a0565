#pragma once

#include "moldsched/generator.hpp"
#include "moldsched/task_model.hpp"

#include <random>
#include <vector>

namespace testutil {

using namespace moldsched;

inline SpeedupProfile table_of(const std::vector<Rat>& loads) {
    return SpeedupProfile::table(loads);
}

inline SpeedupProfile flat_table(const Rat& load, int k) {
    return SpeedupProfile::table(std::vector<Rat>(static_cast<size_t>(k), load));
}

inline Task task_of(int id, SpeedupProfile profile) {
    return Task{id, std::move(profile), std::nullopt};
}

inline Task valued_task(int id, SpeedupProfile profile, Rat value) {
    return Task{id, std::move(profile), std::move(value)};
}

struct CapacityDraw {
    TaskSet tasks;
    Rat d;  // every task is feasible at d
};

/// Random overloaded instance: n tasks against a deadline just above the
/// slowest task's best execution time, with m scaled so that the work
/// typically exceeds capacity and the scheduler has to reject.
inline CapacityDraw draw_capacity_instance(std::uint64_t seed, int delta,
                                           long m_cap = 1024) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(delta));
    GeneratorSpec spec;
    spec.delta = delta;
    spec.k = delta + static_cast<int>(rng() % 7);
    spec.n = 20 + static_cast<int>(rng() % 181);
    long m_hi = std::min<long>(m_cap, std::max<long>(spec.k, static_cast<long>(spec.n) * spec.k / 8));
    spec.m = spec.k + static_cast<int>(rng() % static_cast<std::uint64_t>(m_hi - spec.k + 1));
    spec.workload_min = rat(1);
    spec.workload_max = rat(100);
    spec.growth_min = 0;
    spec.growth_max = rat(1, 4);
    spec.seed = rng();
    TaskSet tasks = generate(spec);

    Rat slowest_best = 0;
    for (const Task& t : tasks.tasks) {
        Rat best = exec_time(t.profile, 1);
        for (int p = 2; p <= tasks.k; ++p) {
            Rat tp = exec_time(t.profile, p);
            best = std::min(best, tp);
        }
        slowest_best = std::max(slowest_best, best);
    }
    Rat d = slowest_best * (8 + static_cast<long>(rng() % 5)) / 8;
    return {std::move(tasks), std::move(d)};
}

} // namespace testutil
