#pragma once

#include "moldsched/scheduler.hpp"

namespace moldsched {

struct WelfareResult {
    Rat tau;
    std::vector<int> order;              // candidates by descending marginal value
    std::vector<int> dropped_infeasible; // no feasible processor count at tau
    int accepted = 0;                    // length of the accepted prefix of order
    Schedule schedule;                   // schedule of the accepted prefix
    Rat welfare;                         // total value of accepted tasks
    Rat omega;                           // utilization of the accepted schedule
    Rat alpha;                           // min minimal/processed workload ratio
    Rat upper_bound;                     // fractional-knapsack bound on the optimum
};

/// Ids sorted by marginal value v_j / D_{j,gamma(j,tau)} descending, ties by
/// ascending id. Tasks infeasible at tau are dropped (reported via *dropped).
/// Throws std::domain_error when a task has no value.
std::vector<int> marginal_order(const TaskSet& tasks, const Rat& tau,
                                std::vector<int>* dropped = nullptr);

/// Optimum of the relaxation where tasks shrink to their minimal workload at
/// tau and may be split: fill capacity m*tau greedily by marginal value, the
/// last item fractionally.
Rat knapsack_upper_bound(const TaskSet& tasks, const Rat& tau);

/// Greedy acceptance by marginal value: grows the candidate prefix until
/// schedule_tasks first fails to place it entirely by tau, and keeps the
/// last fully scheduled prefix.
WelfareResult maximize_welfare(const TaskSet& tasks, const Rat& tau,
                               const ParamSet& params);

} // namespace moldsched
