#pragma once

#include "moldsched/task_model.hpp"

namespace moldsched {

/// Hard caps on the exhaustive solvers; they refuse larger inputs rather
/// than silently truncating the search.
struct OracleLimits {
    int max_tasks = 4;
    int max_procs = 8;
};

/// Exact minimum makespan: enumerates every width vector and every task
/// order, placing each task at the earliest instant its width is free.
/// Some optimal schedule is left-justified and is therefore generated by
/// one of the orders.
Rat brute_makespan(const TaskSet& tasks, const OracleLimits& limits = {});

/// Exact maximum total value of a subset completable by tau; same
/// enumeration per subset. Every task must carry a value.
Rat brute_welfare(const TaskSet& tasks, const Rat& tau, const OracleLimits& limits = {});

} // namespace moldsched
