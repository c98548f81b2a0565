#include "moldsched/params.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace moldsched {

namespace {

// All feasibility conditions below are the defining inequalities multiplied
// out to integers (r = (H-1)/H), so the search runs without allocations.

// (nu / dp) * r >= 1 - r  and  ((nu - 1) / dp) * r < 1 - r
bool nu_feasible(int H, int dp, int nu) {
    return static_cast<long>(nu) * (H - 1) >= dp &&
           static_cast<long>(nu - 1) * (H - 1) < dp;
}

// (h / dp) * r * x <= 1
bool x_small_enough(int H, int dp, int h, int x) {
    return static_cast<long>(h) * (H - 1) * x <= static_cast<long>(H) * dp;
}

// max{1 - r, (h-1)/dp} * x >= r
bool x_large_enough(int H, int dp, int h, int x) {
    if (x >= H - 1) return true;  // (1-r) * x >= r  <=>  x >= H-1
    return static_cast<long>(h - 1) * x * H >= static_cast<long>(H - 1) * dp;
}

std::optional<int> find_x(int H, int dp, int h) {
    // ceil(dp / (r*h)) = ceil(dp*H / ((H-1)*h))
    long den = static_cast<long>(H - 1) * h;
    long x_max = (static_cast<long>(dp) * H + den - 1) / den;
    for (int x = 1; x <= x_max; ++x) {
        if (x_small_enough(H, dp, h, x) && x_large_enough(H, dp, h, x)) return x;
    }
    return std::nullopt;
}

} // namespace

ParamSet search_params(int delta) {
    if (delta < 1) throw std::domain_error("delta must be >= 1");
    for (int H = delta + 1; H >= 2; --H) {
        // Smallest feasible group width first: the utilization penalty for
        // partially filled groups grows with delta_prime, so once some H is
        // feasible at all, the narrowest group achieving it is the one worth
        // keeping. It also makes the result independent of delta within a
        // feasibility band, which the golden tables rely on.
        for (int dp = H - 1; dp <= delta; ++dp) {
            for (int nu = 1; nu <= H - 1; ++nu) {
                if (!nu_feasible(H, dp, nu)) continue;
                std::map<int, int> xs;
                bool all = true;
                for (int h = nu; h <= H - 1; ++h) {
                    if (auto x = find_x(H, dp, h)) {
                        xs[h] = *x;
                    } else {
                        all = false;
                        break;
                    }
                }
                if (all) {
                    ParamSet p;
                    p.delta = delta;
                    p.H = H;
                    p.nu = nu;
                    p.delta_prime = dp;
                    p.r = rat(H - 1, H);
                    p.x = std::move(xs);
                    return p;
                }
            }
        }
    }
    // H = 2, dp = 1, nu = 1, x_1 = 1 is always feasible.
    throw std::logic_error("parameter search found no feasible assignment");
}

bool params_feasible(const ParamSet& p) {
    if (!(1 <= p.nu && p.nu <= p.H - 1 && p.H - 1 <= p.delta_prime &&
          p.delta_prime <= p.delta))
        return false;
    if (p.r != rat(p.H - 1, p.H)) return false;
    const Rat one_minus_r = 1 - p.r;
    if (!(rat(p.nu, p.delta_prime) * p.r >= one_minus_r)) return false;
    if (!(rat(p.nu - 1, p.delta_prime) * p.r < one_minus_r)) return false;
    for (int h = p.nu; h <= p.H - 1; ++h) {
        auto it = p.x.find(h);
        if (it == p.x.end()) return false;
        int x = it->second;
        if (x < 1) return false;
        if (!(rat(h, p.delta_prime) * p.r * x <= 1)) return false;
        Rat slope = std::max(one_minus_r, rat(h - 1, p.delta_prime));
        if (!(slope * x >= p.r)) return false;
    }
    return p.x.size() == static_cast<size_t>(p.H - p.nu);
}

Rat UtilizationBound::theta(long m, int k) const {
    Rat narrow_exit = beta1 * (k - 1) / m;
    Rat group_exit = beta2 / m;
    return mu - std::max(narrow_exit, group_exit);
}

UtilizationBound theta_bound(const ParamSet& p) {
    UtilizationBound b;
    b.mu = p.r;
    b.beta1 = p.r;
    if (p.nu == p.H - 1) {
        b.beta2 = 0;
    } else {
        Rat sum = p.r * (p.delta_prime - 1);
        for (int h = p.nu; h <= p.H - 2; ++h)
            sum += (p.r + rat(h, p.delta_prime) * p.r - 1) * p.delta_prime;
        b.beta2 = sum;
    }
    return b;
}

} // namespace moldsched
