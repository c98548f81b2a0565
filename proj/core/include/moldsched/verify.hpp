#pragma once

#include "moldsched/oracle.hpp"
#include "moldsched/reports.hpp"

#include <cstdint>

namespace moldsched {

/// Full validity audit of a schedule: placements inside [0, d] and [1, m],
/// no processor-time overlap, dedicated tasks at their canonical width and
/// everything else at delta_prime, minimal workloads processed, and the
/// placed/rejected split consistent with the exit reason.
CheckReport validate_schedule(const Schedule& schedule, const TaskSet& tasks,
                              const ParamSet& params);

struct TinyVerifyConfig {
    int delta = 0;     // 0: cycle through {2, 3, 5} by seed
    int max_tasks = 4;
    int max_procs = 8;
    Rat epsilon = 0;   // 0: cycle through {1/2, 1/10, 1/100} by seed
};

/// One seeded tiny instance compared against the exhaustive solvers.
struct TinyVerifyResult {
    std::uint64_t seed = 0;
    int delta = 0, k = 0, m = 0, n = 0;

    bool schedule_valid = false;
    bool bracket_ok = false;          // U <= L*(1+eps), or flagged fast exit
    bool iteration_bound_ok = false;
    bool makespan_ratio_ok = false;   // U*theta <= (1+eps)*optimum
    bool lower_bound_ok = false;      // lower_bound <= optimum
    bool never_beats_oracle = false;  // optimum <= U
    Rat U, optimum_makespan, theta;
    int iterations = 0;

    Rat tau;
    bool sandwich_ok = false;  // upper_bound >= optimum welfare >= greedy welfare
    bool alpha_ok = false;
    bool rejected_feasible = false;  // greedy turned away a schedulable task
    bool theta_welfare_ok = false;   // greedy welfare >= theta * optimum welfare
    Rat welfare, optimum_welfare, upper_bound;

    std::string note;  // first failed check, human readable

    bool makespan_ok() const {
        return schedule_valid && bracket_ok && iteration_bound_ok &&
               makespan_ratio_ok && lower_bound_ok && never_beats_oracle;
    }
    bool welfare_ok() const {
        return sandwich_ok && alpha_ok && (!rejected_feasible || theta_welfare_ok);
    }
    bool all_ok() const { return makespan_ok() && welfare_ok(); }
};

TinyVerifyResult verify_tiny_instance(std::uint64_t seed,
                                      const TinyVerifyConfig& cfg = {});

} // namespace moldsched
