#include "moldsched/makespan.hpp"

#include "moldsched/errors.hpp"

#include <stdexcept>

namespace moldsched {

Rat makespan_lower_bound(const TaskSet& tasks) {
    if (tasks.tasks.empty()) throw std::domain_error("empty task set");
    Rat slowest = 0;
    Rat total_work = 0;
    for (const Task& t : tasks.tasks) {
        Rat best = exec_time(t.profile, 1);
        for (int p = 2; p <= tasks.k; ++p) {
            Rat t_p = exec_time(t.profile, p);
            best = std::min(best, t_p);
        }
        slowest = std::max(slowest, best);
        total_work += workload(t.profile, 1);
    }
    Rat per_processor = total_work / tasks.m;
    return std::max(slowest, per_processor);
}

MakespanResult minimize_makespan(const TaskSet& tasks, const ParamSet& params,
                                 const Rat& epsilon) {
    if (tasks.tasks.empty()) throw std::domain_error("empty task set");
    if (epsilon <= 0 || epsilon >= 1)
        throw std::domain_error("epsilon must be in (0, 1)");

    Rat max_t1 = 0;
    for (const Task& t : tasks.tasks) {
        Rat t1 = exec_time(t.profile, 1);
        max_t1 = std::max(max_t1, t1);
    }

    MakespanResult result;
    result.epsilon = epsilon;
    result.lower_bound = makespan_lower_bound(tasks);
    result.U0 = 2 * static_cast<long>(tasks.tasks.size()) * max_t1;
    result.L0 = result.lower_bound / 2;

    // L0 sits strictly below the optimum, so it can never be feasible; if it
    // is, something upstream broke and the flagged result surfaces it.
    Schedule at_l0 = schedule_tasks(tasks, result.L0, params);
    if (at_l0.exit_reason == ExitReason::all_placed) {
        result.schedule = std::move(at_l0);
        result.U = result.L0;
        result.L = result.L0;
        result.fast_exit = true;
        return result;
    }

    Schedule best = schedule_tasks(tasks, result.U0, params);
    if (best.exit_reason != ExitReason::all_placed)
        throw InfeasibleError(
            "no deadline is feasible for this instance: m = " + std::to_string(tasks.m) +
            " processors cannot host a group of width " +
            std::to_string(params.delta_prime));

    Rat U = result.U0;
    Rat L = result.L0;
    while (U > L * (1 + epsilon)) {
        Rat mid = (U + L) / 2;
        Schedule sched = schedule_tasks(tasks, mid, params);
        ++result.iterations;
        if (sched.exit_reason == ExitReason::all_placed) {
            U = mid;
            best = std::move(sched);
        } else {
            L = mid;
        }
    }

    result.schedule = std::move(best);
    result.U = U;
    result.L = L;
    return result;
}

} // namespace moldsched
