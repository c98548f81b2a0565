#include "moldsched/generator.hpp"

#include <random>
#include <stdexcept>

namespace moldsched {

namespace {

// All draws go through integer operations on mt19937_64 output; the standard
// pins that sequence down to the bit, so instances reproduce everywhere.
int draw_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rat draw_rat(std::mt19937_64& rng, const Rat& lo, const Rat& hi, int grid = 16) {
    if (lo == hi) return lo;
    long step = static_cast<long>(rng() % static_cast<std::uint64_t>(grid + 1));
    return lo + (hi - lo) * step / grid;
}

} // namespace

TaskSet generate(const GeneratorSpec& spec) {
    if (spec.n < 0) throw std::domain_error("n must be >= 0");
    if (spec.delta < 1 || spec.k < spec.delta)
        throw std::domain_error("need 1 <= delta <= k");
    if (spec.m < 1) throw std::domain_error("m must be >= 1");
    if (spec.workload_min <= 0 || spec.workload_max < spec.workload_min)
        throw std::domain_error("empty or non-positive workload range");
    if (spec.growth_min < 0 || spec.growth_max < spec.growth_min)
        throw std::domain_error("empty or negative growth range");
    if (spec.value_range && spec.value_range->second < spec.value_range->first)
        throw std::domain_error("empty value range");

    std::mt19937_64 rng(spec.seed);
    TaskSet tasks;
    tasks.delta = spec.delta;
    tasks.k = spec.k;
    tasks.m = spec.m;
    for (int j = 0; j < spec.n; ++j) {
        Task t;
        t.id = j;
        Rat d1 = draw_rat(rng, spec.workload_min, spec.workload_max);
        int limit = draw_int(rng, spec.delta, spec.k);
        Rat growth = draw_rat(rng, spec.growth_min, spec.growth_max);
        t.profile = SpeedupProfile::piecewise(d1, limit, growth, spec.k);
        if (spec.value_range)
            t.value = draw_rat(rng, spec.value_range->first, spec.value_range->second);
        tasks.tasks.push_back(std::move(t));
    }
    return tasks;
}

SpeedupProfile overhead_table_profile(const Rat& d1, const Rat& c, int delta, int k) {
    if (d1 <= 0 || c < 0 || delta < 1 || k < delta)
        throw std::domain_error("invalid overhead profile parameters");
    std::vector<Rat> workloads;
    workloads.reserve(static_cast<size_t>(k));
    for (int p = 1; p <= k; ++p) {
        if (p <= delta)
            workloads.push_back(d1);
        else
            workloads.push_back(d1 + Rat(p) * (p - 1) * c);
    }
    return SpeedupProfile::table(std::move(workloads));
}

} // namespace moldsched
