#include "moldsched/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace moldsched {

namespace {

struct Run {
    Rat start;
    Rat end;
    int width;
};

// Earliest start at which `width` processors are simultaneously free for
// `duration`, given already placed runs. Capacity model: processors are
// interchangeable, only the in-use count matters.
Rat earliest_start(const std::vector<Run>& placed, int m, int width,
                   const Rat& duration) {
    std::vector<Rat> candidates;
    candidates.push_back(0);
    for (const Run& r : placed) candidates.push_back(r.end);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    for (const Rat& s : candidates) {
        Rat finish = s + duration;
        bool fits = true;
        // usage is piecewise constant; check every breakpoint in [s, finish)
        std::vector<Rat> points;
        points.push_back(s);
        for (const Run& r : placed)
            if (r.start > s && r.start < finish) points.push_back(r.start);
        for (const Rat& t : points) {
            int used = 0;
            for (const Run& r : placed)
                if (r.start <= t && t < r.end) used += r.width;
            if (used + width > m) {
                fits = false;
                break;
            }
        }
        if (fits) return s;
    }
    throw std::logic_error("no feasible start found");  // width <= m rules this out
}

void check_limits(const TaskSet& tasks, const OracleLimits& limits) {
    if (static_cast<int>(tasks.tasks.size()) > limits.max_tasks)
        throw std::domain_error("oracle refuses " + std::to_string(tasks.tasks.size()) +
                                " tasks (limit " + std::to_string(limits.max_tasks) + ")");
    if (tasks.m > limits.max_procs)
        throw std::domain_error("oracle refuses m=" + std::to_string(tasks.m) +
                                " (limit " + std::to_string(limits.max_procs) + ")");
}

// Minimum makespan over all width vectors and left-justified orders of the
// given tasks.
Rat enumerate_min_makespan(const std::vector<const Task*>& chosen, int m,
                           const std::vector<std::vector<int>>& width_choices) {
    const size_t n = chosen.size();
    if (n == 0) return Rat(0);
    Rat best = -1;

    std::vector<size_t> widx(n, 0);
    std::vector<int> perm(n);
    while (true) {
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<Run> placed;
            Rat makespan = 0;
            for (int idx : perm) {
                const Task* t = chosen[static_cast<size_t>(idx)];
                int w = width_choices[static_cast<size_t>(idx)][widx[static_cast<size_t>(idx)]];
                Rat dur = exec_time(t->profile, w);
                Rat s = earliest_start(placed, m, w, dur);
                Rat finish = s + dur;
                placed.push_back({s, finish, w});
                makespan = std::max(makespan, finish);
                if (best >= 0 && makespan >= best) break;  // cannot improve
            }
            if (best < 0 || makespan < best) best = makespan;
        } while (std::next_permutation(perm.begin(), perm.end()));

        size_t i = 0;
        while (i < n && widx[i] + 1 == width_choices[i].size()) widx[i++] = 0;
        if (i == n) break;
        ++widx[i];
    }
    return best;
}

} // namespace

Rat brute_makespan(const TaskSet& tasks, const OracleLimits& limits) {
    check_limits(tasks, limits);
    if (tasks.tasks.empty()) return Rat(0);
    int max_width = std::min(tasks.k, tasks.m);
    std::vector<const Task*> chosen;
    std::vector<std::vector<int>> width_choices;
    for (const Task& t : tasks.tasks) {
        chosen.push_back(&t);
        std::vector<int> ws(static_cast<size_t>(max_width));
        std::iota(ws.begin(), ws.end(), 1);
        width_choices.push_back(std::move(ws));
    }
    return enumerate_min_makespan(chosen, tasks.m, width_choices);
}

Rat brute_welfare(const TaskSet& tasks, const Rat& tau, const OracleLimits& limits) {
    check_limits(tasks, limits);
    if (tau <= 0) throw std::domain_error("deadline must be positive");
    const size_t n = tasks.tasks.size();
    int max_width = std::min(tasks.k, tasks.m);

    // Per-task widths that finish by tau on their own; a task with none can
    // never be part of a feasible bundle.
    std::vector<std::vector<int>> usable(n);
    std::vector<Rat> values(n);
    for (size_t j = 0; j < n; ++j) {
        const Task& t = tasks.tasks[j];
        if (!t.value)
            throw std::domain_error("task " + std::to_string(t.id) + " has no value");
        values[j] = *t.value;
        for (int w = 1; w <= max_width; ++w)
            if (exec_time(t.profile, w) <= tau) usable[j].push_back(w);
    }

    Rat best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<const Task*> chosen;
        std::vector<std::vector<int>> width_choices;
        Rat value = 0;
        bool possible = true;
        for (size_t j = 0; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            if (usable[j].empty()) {
                possible = false;
                break;
            }
            chosen.push_back(&tasks.tasks[j]);
            width_choices.push_back(usable[j]);
            value += values[j];
        }
        if (!possible || value <= best || chosen.empty()) continue;
        Rat makespan = enumerate_min_makespan(chosen, tasks.m, width_choices);
        if (makespan <= tau) best = value;
    }
    return best;
}

} // namespace moldsched
