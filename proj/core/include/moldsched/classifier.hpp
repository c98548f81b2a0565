#pragma once

#include "moldsched/params.hpp"
#include "moldsched/task_model.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace moldsched {

struct CheckReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Partition of a task set at deadline d.
///
/// dedicated: tasks that run alone on their canonical processor count
///   (execution time >= r*d there, so the block pays its way).
/// grouped[h]: tasks with canonical count h in [nu, H-1] that are stacked
///   sequentially on delta_prime-processor groups.
/// filler: tasks so short on delta_prime processors (< (1-r)*d) that they
///   can be appended to any group with spare room.
/// infeasible: tasks with no feasible processor count at d.
///
/// The partition does not depend on m; the scheduler decides rejection.
struct Classification {
    Rat d;
    std::vector<std::pair<int, int>> dedicated;  // (task id, canonical count)
    std::map<int, std::vector<int>> grouped;     // class h -> ids, ascending
    std::vector<int> filler;
    std::vector<int> infeasible;

    bool contains_all(const TaskSet& tasks) const;
};

Classification classify(const TaskSet& tasks, const Rat& d, const ParamSet& params);

/// Samples x_h-element subsets of every grouped class and checks that their
/// total group execution time lands in [r*d, d]. Exhaustive below
/// max_samples_per_class combinations, seeded sampling above.
CheckReport group_fill_property_check(const Classification& cls, const TaskSet& tasks,
                                      const ParamSet& params,
                                      int max_samples_per_class = 100,
                                      std::uint64_t seed = 0);

} // namespace moldsched
