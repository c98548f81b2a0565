#pragma once

#include "moldsched/rational.hpp"

#include <map>

namespace moldsched {

/// Scheduling constants derived from delta.
///
/// H fixes the target per-block utilization r = (H-1)/H: any task whose
/// canonical processor count is >= H already runs long enough alone.
/// Tasks below that are stacked sequentially on groups of delta_prime
/// processors; nu is the smallest canonical count whose tasks still pay
/// their way on such a group, and x_h is how many class-h tasks it takes
/// to fill a group past r*d.
struct ParamSet {
    int delta = 1;
    int H = 2;
    int nu = 1;
    int delta_prime = 1;
    Rat r;                 // (H-1)/H
    std::map<int, int> x;  // h -> x_h for h in [nu, H-1]
};

/// Worst-case utilization guarantee when the scheduler rejects tasks:
/// theta(m, k) = mu - max(beta1 * (k-1) / m, beta2 / m).
struct UtilizationBound {
    Rat mu;
    Rat beta1;
    Rat beta2;

    Rat theta(long m, int k) const;
};

/// Exhaustive search for the largest feasible H, and under it the smallest
/// feasible delta_prime. Deterministic; defined for every delta >= 1.
ParamSet search_params(int delta);

/// Re-substitutes the defining inequalities in exact arithmetic.
bool params_feasible(const ParamSet& params);

UtilizationBound theta_bound(const ParamSet& params);

} // namespace moldsched
