#include "moldsched/task_model.hpp"

#include <set>
#include <stdexcept>

namespace moldsched {

SpeedupProfile SpeedupProfile::table(std::vector<Rat> workloads) {
    SpeedupProfile p;
    p.kind = Kind::table;
    p.k = static_cast<int>(workloads.size());
    p.workloads = std::move(workloads);
    return p;
}

SpeedupProfile SpeedupProfile::piecewise(Rat base_workload, int linear_limit,
                                         Rat growth_rate, int k) {
    SpeedupProfile p;
    p.kind = Kind::piecewise;
    p.k = k;
    p.base_workload = std::move(base_workload);
    p.linear_limit = linear_limit;
    p.growth_rate = std::move(growth_rate);
    return p;
}

const Task& TaskSet::by_id(int id) const {
    for (const Task& t : tasks)
        if (t.id == id) return t;
    throw std::logic_error("no task with id " + std::to_string(id));
}

Rat workload(const SpeedupProfile& profile, int p) {
    if (p < 1 || p > profile.k)
        throw std::domain_error("processor count " + std::to_string(p) +
                                " outside [1, " + std::to_string(profile.k) + "]");
    if (profile.kind == SpeedupProfile::Kind::table)
        return profile.workloads[static_cast<size_t>(p) - 1];
    if (p <= profile.linear_limit) return profile.base_workload;
    return profile.base_workload * (1 + profile.growth_rate * (p - profile.linear_limit));
}

Rat exec_time(const SpeedupProfile& profile, int p) {
    return workload(profile, p) / p;
}

std::optional<int> canonical_processors(const SpeedupProfile& profile, const Rat& d) {
    if (d <= 0) throw std::domain_error("deadline must be positive");
    // Linear scan: k stays small, and the first hit is the minimum.
    for (int p = 1; p <= profile.k; ++p) {
        if (workload(profile, p) <= d * p) return p;
    }
    return std::nullopt;
}

std::vector<ProfileViolation> validate_profile(const SpeedupProfile& profile,
                                               int delta, int k) {
    std::vector<ProfileViolation> violations;
    if (profile.k != k) {
        violations.push_back({0, "profile covers " + std::to_string(profile.k) +
                                     " processor counts, expected k=" + std::to_string(k)});
        return violations;
    }
    if (profile.kind == SpeedupProfile::Kind::piecewise) {
        if (profile.linear_limit < 1 || profile.linear_limit > k)
            violations.push_back({profile.linear_limit, "linear_limit outside [1, k]"});
        if (profile.growth_rate < 0)
            violations.push_back({0, "negative growth_rate"});
        if (profile.base_workload <= 0)
            violations.push_back({1, "non-positive workload"});
        if (profile.linear_limit < delta)
            violations.push_back({profile.linear_limit,
                                  "workload grows below the shared linear bound delta"});
        return violations;
    }
    for (int p = 1; p <= k; ++p) {
        if (workload(profile, p) <= 0)
            violations.push_back({p, "non-positive workload at p=" + std::to_string(p)});
    }
    for (int p = 2; p <= std::min(delta, k); ++p) {
        if (workload(profile, p) != workload(profile, 1))
            violations.push_back({p, "workload not constant on [1, delta] at p=" +
                                         std::to_string(p)});
    }
    for (int p = std::max(delta, 1); p < k; ++p) {
        if (workload(profile, p) > workload(profile, p + 1))
            violations.push_back({p + 1, "workload decreases from p=" + std::to_string(p) +
                                             " to p=" + std::to_string(p + 1)});
    }
    return violations;
}

std::vector<std::string> validate_task_set(const TaskSet& tasks) {
    std::vector<std::string> problems;
    if (tasks.delta < 1) problems.push_back("delta must be >= 1");
    if (tasks.k < tasks.delta) problems.push_back("k must be >= delta");
    if (tasks.m < 1) problems.push_back("m must be >= 1");
    std::set<int> seen;
    for (const Task& t : tasks.tasks) {
        if (t.id < 0) problems.push_back("task id " + std::to_string(t.id) + " is negative");
        if (!seen.insert(t.id).second)
            problems.push_back("duplicate task id " + std::to_string(t.id));
        if (t.value && *t.value < 0)
            problems.push_back("task " + std::to_string(t.id) + " has a negative value");
        for (const ProfileViolation& v : validate_profile(t.profile, tasks.delta, tasks.k))
            problems.push_back("task " + std::to_string(t.id) + ": " + v.what);
    }
    return problems;
}

} // namespace moldsched
