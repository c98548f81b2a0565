#pragma once

#include "moldsched/task_model.hpp"

#include <cstdint>
#include <optional>
#include <utility>

namespace moldsched {

struct GeneratorSpec {
    int n = 0;
    int delta = 1;
    int k = 1;
    int m = 1;
    Rat workload_min;  // range for the base workload D_{j,1}
    Rat workload_max;
    Rat growth_min;  // range for the relative growth above the linear limit
    Rat growth_max;
    std::optional<std::pair<Rat, Rat>> value_range;
    std::uint64_t seed = 0;
};

/// Draws n piecewise profiles with per-task linear limit in [delta, k] and
/// growth in range; every profile validates against (delta, k).
/// Identical spec (including seed) yields an identical task set.
TaskSet generate(const GeneratorSpec& spec);

/// Table profile snapped from the affine-overhead time model
/// t_p = d1/p + (p-1)*c: workload held constant on [1, delta], then
/// D_p = d1 + p*(p-1)*c. The raw model grows for every p > 1, so the
/// constant region is imposed to keep the profile valid.
SpeedupProfile overhead_table_profile(const Rat& d1, const Rat& c, int delta, int k);

} // namespace moldsched
