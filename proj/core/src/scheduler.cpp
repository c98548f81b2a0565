#include "moldsched/scheduler.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>

namespace moldsched {

const char* to_string(ExitReason reason) {
    switch (reason) {
        case ExitReason::all_placed: return "all_placed";
        case ExitReason::insufficient_for_dedicated: return "insufficient_for_dedicated";
        case ExitReason::insufficient_for_group: return "insufficient_for_group";
    }
    return "unknown";
}

namespace {

template <typename T>
void seeded_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (size_t i = 0; i + 1 < v.size(); ++i) {
        size_t j = i + rng() % (v.size() - i);
        std::swap(v[i], v[j]);
    }
}

} // namespace

Schedule schedule_tasks(const TaskSet& tasks, const Rat& d, const ParamSet& params,
                        std::optional<std::uint64_t> shuffle_seed) {
    if (d <= 0) throw std::domain_error("deadline must be positive");
    Classification cls = classify(tasks, d, params);

    Schedule s;
    s.d = d;
    s.m = tasks.m;
    s.rejected = cls.infeasible;

    std::optional<std::mt19937_64> rng;
    if (shuffle_seed) rng.emplace(*shuffle_seed);

    // Dedicated tasks, widest block first so a capacity exit happens as late
    // as possible; the utilization bound holds under any order.
    auto dedicated = cls.dedicated;
    if (rng) {
        seeded_shuffle(dedicated, *rng);
    } else {
        std::sort(dedicated.begin(), dedicated.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second > b.second;
            return a.first < b.first;
        });
    }

    // Class queues in service order: highest grouped class down to nu, then
    // filler (uniformly indexed as class nu - 1).
    std::vector<std::pair<int, std::deque<int>>> queues;
    for (auto it = cls.grouped.rbegin(); it != cls.grouped.rend(); ++it) {
        auto ids = it->second;
        if (rng) seeded_shuffle(ids, *rng);
        queues.emplace_back(it->first, std::deque<int>(ids.begin(), ids.end()));
    }
    {
        auto ids = cls.filler;
        if (rng) seeded_shuffle(ids, *rng);
        if (!ids.empty())
            queues.emplace_back(params.nu - 1, std::deque<int>(ids.begin(), ids.end()));
    }

    auto reject_everything_left = [&](size_t dedicated_from, size_t queue_from) {
        for (size_t i = dedicated_from; i < dedicated.size(); ++i)
            s.rejected.push_back(dedicated[i].first);
        for (size_t q = queue_from; q < queues.size(); ++q)
            for (int id : queues[q].second) s.rejected.push_back(id);
        std::sort(s.rejected.begin(), s.rejected.end());
    };

    int next_proc = 1;

    for (size_t i = 0; i < dedicated.size(); ++i) {
        const auto& [id, width] = dedicated[i];
        ++s.steps;
        int idle = s.m - next_proc + 1;
        if (width > idle) {
            s.exit_reason = ExitReason::insufficient_for_dedicated;
            reject_everything_left(i, 0);
            return s;
        }
        s.placements.push_back(
            {id, next_proc, width, Rat(0), exec_time(tasks.by_id(id).profile, width)});
        next_proc += width;
    }

    size_t top = 0;  // first queue that may still hold tasks
    auto advance_top = [&] {
        while (top < queues.size() && queues[top].second.empty()) ++top;
    };
    advance_top();

    while (top < queues.size()) {
        int idle = s.m - next_proc + 1;
        if (idle < params.delta_prime) {
            s.exit_reason = ExitReason::insufficient_for_group;
            reject_everything_left(dedicated.size(), top);
            return s;
        }
        GroupInfo group;
        group.first_processor = next_proc;
        group.busy = 0;
        while (true) {
            advance_top();
            if (top == queues.size()) break;  // drained: every task is placed
            auto& [cls_index, queue] = queues[top];
            int head = queue.front();
            ++s.steps;
            Rat t = exec_time(tasks.by_id(head).profile, params.delta_prime);
            if (group.busy + t > d) {
                group.capacity_closed = true;
                group.failing_class = cls_index;
                break;
            }
            s.placements.push_back({head, next_proc, params.delta_prime, group.busy,
                                    group.busy + t});
            group.busy += t;
            if (group.tasks_placed == 0) group.first_class = cls_index;
            group.last_class = cls_index;
            ++group.tasks_placed;
            queue.pop_front();
        }
        s.groups.push_back(group);
        next_proc += params.delta_prime;
    }

    s.exit_reason = cls.infeasible.empty() ? ExitReason::all_placed
                                           : ExitReason::insufficient_for_dedicated;
    return s;
}

Rat utilization(const Schedule& schedule) {
    Rat busy = 0;
    for (const Placement& p : schedule.placements)
        busy += (p.end - p.start) * p.width;
    return busy / (schedule.d * schedule.m);
}

CheckReport min_workload_check(const Schedule& schedule, const TaskSet& tasks,
                               const Rat& d) {
    CheckReport report;
    for (const Placement& p : schedule.placements) {
        const Task& task = tasks.by_id(p.task_id);
        auto gamma = canonical_processors(task.profile, d);
        if (!gamma) {
            report.violations.push_back("task " + std::to_string(p.task_id) +
                                        " placed despite being infeasible at d");
            continue;
        }
        if (workload(task.profile, p.width) != workload(task.profile, *gamma))
            report.violations.push_back(
                "task " + std::to_string(p.task_id) + " at width " +
                std::to_string(p.width) + " processes more than its minimal workload");
    }
    return report;
}

} // namespace moldsched
