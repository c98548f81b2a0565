#include "moldsched/welfare.hpp"

#include <algorithm>
#include <stdexcept>

namespace moldsched {

std::vector<int> marginal_order(const TaskSet& tasks, const Rat& tau,
                                std::vector<int>* dropped) {
    if (tau <= 0) throw std::domain_error("deadline must be positive");
    struct Entry {
        int id;
        Rat marginal;
    };
    std::vector<Entry> entries;
    for (const Task& t : tasks.tasks) {
        if (!t.value)
            throw std::domain_error("task " + std::to_string(t.id) + " has no value");
        auto gamma = canonical_processors(t.profile, tau);
        if (!gamma) {
            if (dropped) dropped->push_back(t.id);
            continue;
        }
        entries.push_back({t.id, *t.value / workload(t.profile, *gamma)});
    }
    if (dropped) std::sort(dropped->begin(), dropped->end());
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.marginal != b.marginal) return a.marginal > b.marginal;
        return a.id < b.id;
    });
    std::vector<int> order;
    order.reserve(entries.size());
    for (const Entry& e : entries) order.push_back(e.id);
    return order;
}

Rat knapsack_upper_bound(const TaskSet& tasks, const Rat& tau) {
    std::vector<int> order = marginal_order(tasks, tau);
    const Rat capacity = Rat(tasks.m) * tau;
    Rat filled = 0;
    Rat bound = 0;
    for (int id : order) {
        const Task& t = tasks.by_id(id);
        Rat size = workload(t.profile, *canonical_processors(t.profile, tau));
        if (filled + size <= capacity) {
            bound += *t.value;
            filled += size;
        } else {
            bound += *t.value * (capacity - filled) / size;
            break;
        }
    }
    return bound;
}

WelfareResult maximize_welfare(const TaskSet& tasks, const Rat& tau,
                               const ParamSet& params) {
    WelfareResult result;
    result.tau = tau;
    result.order = marginal_order(tasks, tau, &result.dropped_infeasible);
    result.upper_bound = knapsack_upper_bound(tasks, tau);

    // Empty prefix fallback: nothing scheduled.
    result.schedule.d = tau;
    result.schedule.m = tasks.m;

    TaskSet prefix;
    prefix.delta = tasks.delta;
    prefix.k = tasks.k;
    prefix.m = tasks.m;
    for (size_t i = 0; i < result.order.size(); ++i) {
        prefix.tasks.push_back(tasks.by_id(result.order[i]));
        Schedule sched = schedule_tasks(prefix, tau, params);
        if (sched.exit_reason != ExitReason::all_placed) break;
        result.accepted = static_cast<int>(i) + 1;
        result.schedule = std::move(sched);
    }

    result.welfare = 0;
    for (int i = 0; i < result.accepted; ++i)
        result.welfare += *tasks.by_id(result.order[static_cast<size_t>(i)]).value;
    result.omega = utilization(result.schedule);
    result.alpha = 1;
    for (const Placement& p : result.schedule.placements) {
        const Task& t = tasks.by_id(p.task_id);
        int gamma = *canonical_processors(t.profile, tau);
        Rat ratio = workload(t.profile, gamma) / workload(t.profile, p.width);
        result.alpha = std::min(result.alpha, ratio);
    }
    return result;
}

} // namespace moldsched
