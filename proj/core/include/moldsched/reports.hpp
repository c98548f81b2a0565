#pragma once

#include "moldsched/makespan.hpp"
#include "moldsched/tables.hpp"
#include "moldsched/welfare.hpp"

#include <cstdint>
#include <string>

namespace moldsched {

/// Machine-readable command outputs. Each builder returns the exact JSON
/// text the CLI prints; all numerics are rational strings or integers, so
/// identical inputs give byte-identical reports.
std::string params_report(int delta, int m, int k);
std::string classify_report(const TaskSet& tasks, const Rat& d);
std::string schedule_report(const TaskSet& tasks, const Rat& d,
                            std::optional<std::uint64_t> shuffle_seed = {});
std::string makespan_report(const TaskSet& tasks, const Rat& epsilon);
std::string welfare_report(const TaskSet& tasks, const Rat& tau);
std::string tables_report();

/// The schedule behind schedule_report, for callers that also want the
/// schedule file.
Schedule schedule_for_report(const TaskSet& tasks, const Rat& d,
                             std::optional<std::uint64_t> shuffle_seed = {});

} // namespace moldsched
