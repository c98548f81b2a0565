#pragma once

#include "moldsched/classifier.hpp"

#include <cstdint>
#include <optional>

namespace moldsched {

struct Placement {
    int task_id = 0;
    int first_processor = 0;  // 1-based; occupies [first, first + width - 1]
    int width = 0;
    Rat start;
    Rat end;
};

enum class ExitReason {
    all_placed,
    insufficient_for_dedicated,  // a dedicated task found too few idle processors
    insufficient_for_group,      // fewer than delta_prime idle processors remained
};

const char* to_string(ExitReason reason);

/// Per-group accounting kept for the utilization analysis and its tests.
struct GroupInfo {
    int first_processor = 0;
    int first_class = -1;        // class of the first task placed
    int last_class = -1;         // class of the last task placed
    int tasks_placed = 0;
    bool capacity_closed = false;  // closed because the next head did not fit
    int failing_class = -1;        // class of that head; -1 when drained
    Rat busy;                      // total sequential execution time

    bool single_class() const { return first_class == last_class; }
};

struct Schedule {
    Rat d;
    int m = 0;
    std::vector<Placement> placements;
    std::vector<int> rejected;
    ExitReason exit_reason = ExitReason::all_placed;

    // instrumentation, not serialized
    std::vector<GroupInfo> groups;
    long steps = 0;  // task examinations; linear in n
};

/// Places every dedicated task alone on its canonical count of leftmost idle
/// processors, then stacks the remaining classes (highest first, filler last)
/// sequentially on delta_prime-processor groups within [0, d]. A group closes
/// when the head of the highest-priority nonempty class no longer fits.
/// Exits early, rejecting all unplaced tasks, when idle processors run out.
///
/// Tasks infeasible at d are rejected up front and force a capacity exit.
/// Order within classes is ascending id, or seeded-shuffled when requested;
/// dedicated tasks go widest first.
Schedule schedule_tasks(const TaskSet& tasks, const Rat& d, const ParamSet& params,
                        std::optional<std::uint64_t> shuffle_seed = {});

/// Processed work over m*d.
Rat utilization(const Schedule& schedule);

/// Every placement must process exactly the task's minimal workload at d,
/// i.e. workload(width) == workload(canonical count).
CheckReport min_workload_check(const Schedule& schedule, const TaskSet& tasks,
                               const Rat& d);

} // namespace moldsched
