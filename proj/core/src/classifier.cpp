#include "moldsched/classifier.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace moldsched {

bool Classification::contains_all(const TaskSet& tasks) const {
    std::set<int> seen;
    for (const auto& [id, width] : dedicated) seen.insert(id);
    for (const auto& [h, ids] : grouped) seen.insert(ids.begin(), ids.end());
    seen.insert(filler.begin(), filler.end());
    seen.insert(infeasible.begin(), infeasible.end());
    size_t total = dedicated.size() + filler.size() + infeasible.size();
    for (const auto& [h, ids] : grouped) total += ids.size();
    if (total != seen.size()) return false;  // a task landed in two parts
    for (const Task& t : tasks.tasks)
        if (!seen.count(t.id)) return false;
    return seen.size() == tasks.tasks.size();
}

Classification classify(const TaskSet& tasks, const Rat& d, const ParamSet& params) {
    if (d <= 0) throw std::domain_error("deadline must be positive");
    Classification cls;
    cls.d = d;
    const Rat long_threshold = params.r * d;         // dedicated boundary, non-strict
    const Rat short_threshold = (1 - params.r) * d;  // filler boundary, strict
    for (const Task& t : tasks.tasks) {
        auto gamma = canonical_processors(t.profile, d);
        if (!gamma) {
            cls.infeasible.push_back(t.id);
            continue;
        }
        if (*gamma >= params.H || exec_time(t.profile, *gamma) >= long_threshold) {
            cls.dedicated.emplace_back(t.id, *gamma);
        } else if (*gamma <= params.nu - 1 ||
                   exec_time(t.profile, params.delta_prime) < short_threshold) {
            cls.filler.push_back(t.id);
        } else {
            cls.grouped[*gamma].push_back(t.id);
        }
    }
    std::sort(cls.dedicated.begin(), cls.dedicated.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [h, ids] : cls.grouped) std::sort(ids.begin(), ids.end());
    std::sort(cls.filler.begin(), cls.filler.end());
    std::sort(cls.infeasible.begin(), cls.infeasible.end());
    return cls;
}

namespace {

void check_combination(const std::vector<Rat>& times, const std::vector<int>& pick,
                       int h, const Rat& lo, const Rat& hi, CheckReport& report) {
    Rat sum = 0;
    for (int idx : pick) sum += times[static_cast<size_t>(idx)];
    if (sum < lo || sum > hi)
        report.violations.push_back(
            "class " + std::to_string(h) + ": " + std::to_string(pick.size()) +
            "-task group time " + to_string(sum) + " outside [" + to_string(lo) +
            ", " + to_string(hi) + "]");
}

// Count of x-combinations, saturating early.
long combination_count(size_t n, int x, long cap) {
    long count = 1;
    for (int i = 0; i < x; ++i) {
        count = count * static_cast<long>(n - static_cast<size_t>(i)) / (i + 1);
        if (count > cap) return cap + 1;
    }
    return count;
}

} // namespace

CheckReport group_fill_property_check(const Classification& cls, const TaskSet& tasks,
                                      const ParamSet& params, int max_samples_per_class,
                                      std::uint64_t seed) {
    CheckReport report;
    const Rat lo = params.r * cls.d;
    const Rat hi = cls.d;
    for (const auto& [h, ids] : cls.grouped) {
        int x = params.x.at(h);
        if (static_cast<int>(ids.size()) < x) continue;  // vacuous
        std::vector<Rat> times;
        times.reserve(ids.size());
        for (int id : ids)
            times.push_back(exec_time(tasks.by_id(id).profile, params.delta_prime));

        if (combination_count(ids.size(), x, max_samples_per_class) <=
            max_samples_per_class) {
            std::vector<int> pick(static_cast<size_t>(x));
            for (int i = 0; i < x; ++i) pick[static_cast<size_t>(i)] = i;
            while (true) {
                check_combination(times, pick, h, lo, hi, report);
                int i = x - 1;
                while (i >= 0 &&
                       pick[static_cast<size_t>(i)] ==
                           static_cast<int>(ids.size()) - x + i)
                    --i;
                if (i < 0) break;
                ++pick[static_cast<size_t>(i)];
                for (int j = i + 1; j < x; ++j)
                    pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
            }
        } else {
            std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(h));
            std::vector<int> indices(ids.size());
            for (size_t i = 0; i < ids.size(); ++i) indices[i] = static_cast<int>(i);
            for (int s = 0; s < max_samples_per_class; ++s) {
                for (size_t i = 0; i < static_cast<size_t>(x); ++i) {
                    size_t j = i + rng() % (indices.size() - i);
                    std::swap(indices[i], indices[j]);
                }
                std::vector<int> pick(indices.begin(), indices.begin() + x);
                check_combination(times, pick, h, lo, hi, report);
            }
        }
    }
    return report;
}

} // namespace moldsched
