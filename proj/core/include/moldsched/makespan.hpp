#pragma once

#include "moldsched/scheduler.hpp"

namespace moldsched {

struct MakespanResult {
    Schedule schedule;  // feasible at U
    Rat U;
    Rat L;
    int iterations = 0;
    Rat epsilon;
    bool fast_exit = false;  // already feasible at the initial lower bracket
    Rat lower_bound;         // valid lower bound on any makespan
    Rat U0;
    Rat L0;
};

/// max(slowest task at its best width, total minimal workload / m).
Rat makespan_lower_bound(const TaskSet& tasks);

/// Bisects deadlines with schedule_tasks as the feasibility oracle until
/// U <= L * (1 + epsilon), keeping the last feasible schedule.
/// The initial bracket is U0 = 2 * n * max_j t_{j,1} (always feasible given
/// m >= delta_prime) and L0 = lower_bound / 2 (never feasible).
///
/// Throws std::domain_error for epsilon outside (0,1) or an empty task set,
/// and InfeasibleError when no deadline is feasible (m < delta_prime).
MakespanResult minimize_makespan(const TaskSet& tasks, const ParamSet& params,
                                 const Rat& epsilon = rat(1, 100));

} // namespace moldsched
