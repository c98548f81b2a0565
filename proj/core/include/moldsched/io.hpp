#pragma once

#include "moldsched/errors.hpp"
#include "moldsched/generator.hpp"
#include "moldsched/scheduler.hpp"

#include <string>

namespace moldsched {

// Instance documents:
//   { "delta": int, "k": int, "m": int,
//     "tasks": [ { "id": int, "value": "3/2"?,
//                  "profile": {"type": "table", "workloads": ["12", ...]}
//                           | {"type": "piecewise", "d1": "10",
//                              "linear_limit": 5, "growth": "1/10"} } ] }
// Schedule documents:
//   { "d": "1", "m": int, "exit_reason": str,
//     "placements": [ {"task": int, "first_processor": int, "width": int,
//                      "start": "0", "end": "4/5"} ],
//     "rejected": [int] }
// All numerics are exact: integers or rational strings ("11/15", "0.25").
// Unknown fields are rejected with a position-annotated SchemaError.

TaskSet parse_instance(const std::string& text);
std::string instance_to_json(const TaskSet& tasks);
TaskSet load_instance(const std::string& path);
void save_instance(const TaskSet& tasks, const std::string& path);

Schedule parse_schedule(const std::string& text);
std::string schedule_to_json(const Schedule& schedule);
Schedule load_schedule(const std::string& path);
void save_schedule(const Schedule& schedule, const std::string& path);

GeneratorSpec parse_generator_spec(const std::string& text);
std::string generator_spec_to_json(const GeneratorSpec& spec);
GeneratorSpec load_generator_spec(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace moldsched
