#include "moldsched/verify.hpp"

#include "moldsched/generator.hpp"
#include "moldsched/makespan.hpp"
#include "moldsched/welfare.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace moldsched {

CheckReport validate_schedule(const Schedule& s, const TaskSet& tasks,
                              const ParamSet& params) {
    CheckReport report;
    auto complain = [&](const std::string& what) { report.violations.push_back(what); };

    Classification cls = classify(tasks, s.d, params);
    std::set<int> dedicated_ids;
    std::map<int, int> gamma_of;
    for (const auto& [id, g] : cls.dedicated) {
        dedicated_ids.insert(id);
        gamma_of[id] = g;
    }

    std::set<int> placed_ids;
    for (const Placement& p : s.placements) {
        if (!placed_ids.insert(p.task_id).second)
            complain("task " + std::to_string(p.task_id) + " placed twice");
        if (p.start < 0 || p.end > s.d || !(p.start < p.end))
            complain("task " + std::to_string(p.task_id) + " outside [0, d]");
        if (p.first_processor < 1 || p.first_processor + p.width - 1 > s.m)
            complain("task " + std::to_string(p.task_id) + " outside [1, m]");
        const Task& t = tasks.by_id(p.task_id);
        if (p.end - p.start != exec_time(t.profile, p.width))
            complain("task " + std::to_string(p.task_id) + " duration mismatch");
        if (dedicated_ids.count(p.task_id)) {
            if (p.width != gamma_of[p.task_id])
                complain("dedicated task " + std::to_string(p.task_id) +
                         " not at its canonical width");
        } else if (p.width != params.delta_prime) {
            complain("grouped task " + std::to_string(p.task_id) +
                     " not at width delta_prime");
        }
    }

    // Overlaps: processor ranges here are either identical (one group) or
    // disjoint; identical ranges must be time-disjoint.
    std::vector<const Placement*> by_range(s.placements.size());
    for (size_t i = 0; i < s.placements.size(); ++i) by_range[i] = &s.placements[i];
    std::sort(by_range.begin(), by_range.end(), [](const Placement* a, const Placement* b) {
        if (a->first_processor != b->first_processor)
            return a->first_processor < b->first_processor;
        return a->start < b->start;
    });
    for (size_t i = 0; i + 1 < by_range.size(); ++i) {
        const Placement* a = by_range[i];
        const Placement* b = by_range[i + 1];
        bool same_range = a->first_processor == b->first_processor && a->width == b->width;
        bool ranges_overlap = b->first_processor <= a->first_processor + a->width - 1;
        if (same_range) {
            if (b->start < a->end)
                complain("tasks " + std::to_string(a->task_id) + " and " +
                         std::to_string(b->task_id) + " overlap in time");
        } else if (ranges_overlap) {
            complain("tasks " + std::to_string(a->task_id) + " and " +
                     std::to_string(b->task_id) + " overlap in processors");
        }
    }

    for (int id : s.rejected)
        if (placed_ids.count(id))
            complain("task " + std::to_string(id) + " both placed and rejected");
    if (placed_ids.size() + s.rejected.size() != tasks.tasks.size())
        complain("placed + rejected does not cover the task set");
    if (s.rejected.empty() != (s.exit_reason == ExitReason::all_placed))
        complain("exit reason inconsistent with the rejected list");

    CheckReport workloads = min_workload_check(s, tasks, s.d);
    report.violations.insert(report.violations.end(), workloads.violations.begin(),
                             workloads.violations.end());
    return report;
}

TinyVerifyResult verify_tiny_instance(std::uint64_t seed, const TinyVerifyConfig& cfg) {
    TinyVerifyResult r;
    r.seed = seed;
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);

    static const int delta_cycle[] = {2, 3, 5};
    r.delta = cfg.delta > 0 ? cfg.delta : delta_cycle[rng() % 3];
    ParamSet params = search_params(r.delta);

    r.k = r.delta + static_cast<int>(rng() % 2);
    int m_floor = std::max({params.delta_prime, r.k, 2});
    if (m_floor > cfg.max_procs) m_floor = cfg.max_procs;
    r.m = m_floor + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                         cfg.max_procs - m_floor + 1));
    r.n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.max_tasks));

    GeneratorSpec gspec;
    gspec.n = r.n;
    gspec.delta = r.delta;
    gspec.k = r.k;
    gspec.m = r.m;
    gspec.workload_min = rat(1, 2);
    gspec.workload_max = rat(8);
    gspec.growth_min = 0;
    gspec.growth_max = rat(1, 4);
    gspec.value_range = {{rat(1), rat(10)}};
    gspec.seed = rng();
    TaskSet tasks = generate(gspec);

    Rat epsilon = cfg.epsilon;
    if (epsilon == 0) {
        static const std::pair<int, int> eps_cycle[] = {{1, 2}, {1, 10}, {1, 100}};
        auto [num, den] = eps_cycle[rng() % 3];
        epsilon = rat(num, den);
    }

    UtilizationBound bound = theta_bound(params);
    r.theta = bound.theta(r.m, r.k);

    auto note = [&](const std::string& what) {
        if (r.note.empty()) r.note = what;
    };

    OracleLimits limits{cfg.max_tasks, cfg.max_procs};
    r.optimum_makespan = brute_makespan(tasks, limits);

    MakespanResult ms = minimize_makespan(tasks, params, epsilon);
    r.U = ms.U;
    r.iterations = ms.iterations;
    r.bracket_ok = ms.fast_exit || ms.U <= ms.L * (1 + epsilon);
    if (!r.bracket_ok) note("bisection stopped with U > L*(1+eps)");
    double budget = std::log2(to_double(ms.U0) / to_double(ms.L0) /
                              to_double(epsilon)) + 2.0;
    r.iteration_bound_ok = ms.iterations <= budget;
    if (!r.iteration_bound_ok) note("bisection exceeded its iteration budget");
    r.schedule_valid = validate_schedule(ms.schedule, tasks, params).ok() &&
                       ms.schedule.exit_reason == ExitReason::all_placed;
    if (!r.schedule_valid) note("final schedule failed validation");
    r.makespan_ratio_ok = r.theta > 0 && r.U * r.theta <= (1 + epsilon) * r.optimum_makespan;
    if (!r.makespan_ratio_ok) note("U exceeds (1/theta)(1+eps) * optimum");
    r.lower_bound_ok = ms.lower_bound <= r.optimum_makespan;
    if (!r.lower_bound_ok) note("lower bound exceeds the optimum makespan");
    r.never_beats_oracle = r.optimum_makespan <= r.U;
    if (!r.never_beats_oracle) note("feasible U below the exact optimum");

    static const std::pair<int, int> tau_cycle[] = {{5, 8}, {7, 8}, {9, 8}};
    auto [tn, td] = tau_cycle[rng() % 3];
    r.tau = r.optimum_makespan * tn / td;

    WelfareResult greedy = maximize_welfare(tasks, r.tau, params);
    r.welfare = greedy.welfare;
    r.upper_bound = greedy.upper_bound;
    r.optimum_welfare = brute_welfare(tasks, r.tau, limits);
    r.sandwich_ok = r.upper_bound >= r.optimum_welfare &&
                    r.optimum_welfare >= r.welfare;
    if (!r.sandwich_ok) note("upper bound / optimum / greedy sandwich violated");
    r.alpha_ok = greedy.alpha == 1;
    if (!r.alpha_ok) note("a task processed more than its minimal workload");
    r.rejected_feasible =
        greedy.accepted < static_cast<int>(greedy.order.size());
    r.theta_welfare_ok = !r.rejected_feasible ||
                         r.welfare >= r.theta * r.optimum_welfare;
    if (!r.theta_welfare_ok) note("greedy welfare below theta * optimum");
    return r;
}

} // namespace moldsched
