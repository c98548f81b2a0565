#pragma once

#include "moldsched/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace moldsched {

/// Workload curve of a moldable task over p in [1, k] processors.
///
/// The curve is either tabulated per processor count or given as a
/// constant/linear-growth pair: workload stays at base_workload up to
/// linear_limit processors and grows by growth_rate * base_workload for
/// every processor beyond it.
struct SpeedupProfile {
    enum class Kind { table, piecewise };

    Kind kind = Kind::table;
    int k = 0;
    std::vector<Rat> workloads;  // table kind: workloads[p-1] for p = 1..k
    Rat base_workload;           // piecewise kind
    int linear_limit = 0;        // piecewise kind
    Rat growth_rate;             // piecewise kind, relative per extra processor

    static SpeedupProfile table(std::vector<Rat> workloads);
    static SpeedupProfile piecewise(Rat base_workload, int linear_limit,
                                    Rat growth_rate, int k);
};

struct Task {
    int id = 0;
    SpeedupProfile profile;
    std::optional<Rat> value;  // only the welfare objective reads this
};

struct TaskSet {
    int delta = 1;  // linear-speedup bound shared by all tasks
    int k = 1;      // parallelism bound shared by all tasks
    int m = 1;      // processor count
    std::vector<Task> tasks;

    const Task& by_id(int id) const;
};

/// Workload D_{j,p}. Throws std::domain_error when p is outside [1, k].
Rat workload(const SpeedupProfile& profile, int p);

/// Execution time D_{j,p} / p.
Rat exec_time(const SpeedupProfile& profile, int p);

/// Minimum p in [1, k] that finishes by d, or absent when even the fastest
/// processor count is too slow. d must be positive.
std::optional<int> canonical_processors(const SpeedupProfile& profile, const Rat& d);

struct ProfileViolation {
    int p = 0;
    std::string what;
};

/// Checks a profile against the (delta, k) contract: positive workloads,
/// constant on [1, delta], non-decreasing on [delta, k].
std::vector<ProfileViolation> validate_profile(const SpeedupProfile& profile,
                                               int delta, int k);

/// Set-level checks: bounds sane, ids unique, every profile valid.
std::vector<std::string> validate_task_set(const TaskSet& tasks);

} // namespace moldsched
