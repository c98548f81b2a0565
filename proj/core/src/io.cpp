#include "moldsched/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace moldsched {

using json = nlohmann::ordered_json;

namespace {

const json& need(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(where, std::string("missing field '") + key + "'");
    return *it;
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) known = true;
        if (!known) throw SchemaError(where, "unknown field '" + it.key() + "'");
    }
}

int as_int(const json& v, const std::string& where) {
    if (!v.is_number_integer())
        throw SchemaError(where, "expected an integer");
    return v.get<int>();
}

Rat as_rat(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Rat(v.get<long>());
    if (v.is_number_float())
        throw SchemaError(where, "floating-point numerals are not accepted; "
                                 "encode rationals as strings like \"11/15\"");
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw SchemaError(where, e.what());
        }
    }
    throw SchemaError(where, "expected a rational string or an integer");
}

json rat_json(const Rat& r) { return json(to_string(r)); }

json parse_document(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw SchemaError("", "document is not valid JSON");
    return doc;
}

std::string as_str(const json& v, const std::string& where) {
    if (!v.is_string()) throw SchemaError(where, "expected a string");
    return v.get<std::string>();
}

SpeedupProfile parse_profile(const json& v, int k, const std::string& where) {
    if (!v.is_object()) throw SchemaError(where, "expected an object");
    std::string type = as_str(need(v, "type", where), where + ".type");
    if (type == "table") {
        reject_unknown(v, {"type", "workloads"}, where);
        const json& w = need(v, "workloads", where);
        if (!w.is_array()) throw SchemaError(where + ".workloads", "expected an array");
        if (static_cast<int>(w.size()) != k)
            throw SchemaError(where + ".workloads",
                              "expected k=" + std::to_string(k) + " entries, got " +
                                  std::to_string(w.size()));
        std::vector<Rat> loads;
        for (size_t i = 0; i < w.size(); ++i)
            loads.push_back(as_rat(w[i], where + ".workloads[" + std::to_string(i) + "]"));
        return SpeedupProfile::table(std::move(loads));
    }
    if (type == "piecewise") {
        reject_unknown(v, {"type", "d1", "linear_limit", "growth"}, where);
        Rat d1 = as_rat(need(v, "d1", where), where + ".d1");
        int limit = as_int(need(v, "linear_limit", where), where + ".linear_limit");
        Rat growth = as_rat(need(v, "growth", where), where + ".growth");
        return SpeedupProfile::piecewise(d1, limit, growth, k);
    }
    throw SchemaError(where + ".type", "unknown profile type '" + type + "'");
}

} // namespace

TaskSet parse_instance(const std::string& text) {
    json doc = parse_document(text);
    if (!doc.is_object()) throw SchemaError("", "instance must be an object");
    reject_unknown(doc, {"delta", "k", "m", "tasks"}, "");
    TaskSet tasks;
    tasks.delta = as_int(need(doc, "delta", ""), "delta");
    tasks.k = as_int(need(doc, "k", ""), "k");
    tasks.m = as_int(need(doc, "m", ""), "m");
    const json& arr = need(doc, "tasks", "");
    if (!arr.is_array()) throw SchemaError("tasks", "expected an array");
    for (size_t i = 0; i < arr.size(); ++i) {
        std::string where = "tasks[" + std::to_string(i) + "]";
        const json& tv = arr[i];
        if (!tv.is_object()) throw SchemaError(where, "expected an object");
        reject_unknown(tv, {"id", "value", "profile"}, where);
        Task t;
        t.id = as_int(need(tv, "id", where), where + ".id");
        if (tv.contains("value")) t.value = as_rat(tv["value"], where + ".value");
        t.profile = parse_profile(need(tv, "profile", where), tasks.k, where + ".profile");
        tasks.tasks.push_back(std::move(t));
    }
    auto problems = validate_task_set(tasks);
    if (!problems.empty()) throw SchemaError("", problems.front());
    return tasks;
}

std::string instance_to_json(const TaskSet& tasks) {
    json doc;
    doc["delta"] = tasks.delta;
    doc["k"] = tasks.k;
    doc["m"] = tasks.m;
    doc["tasks"] = json::array();
    for (const Task& t : tasks.tasks) {
        json tv;
        tv["id"] = t.id;
        if (t.value) tv["value"] = rat_json(*t.value);
        json pv;
        if (t.profile.kind == SpeedupProfile::Kind::table) {
            pv["type"] = "table";
            pv["workloads"] = json::array();
            for (const Rat& w : t.profile.workloads) pv["workloads"].push_back(rat_json(w));
        } else {
            pv["type"] = "piecewise";
            pv["d1"] = rat_json(t.profile.base_workload);
            pv["linear_limit"] = t.profile.linear_limit;
            pv["growth"] = rat_json(t.profile.growth_rate);
        }
        tv["profile"] = std::move(pv);
        doc["tasks"].push_back(std::move(tv));
    }
    return doc.dump(2) + "\n";
}

Schedule parse_schedule(const std::string& text) {
    json doc = parse_document(text);
    if (!doc.is_object()) throw SchemaError("", "schedule must be an object");
    reject_unknown(doc, {"d", "m", "exit_reason", "placements", "rejected"}, "");
    Schedule s;
    s.d = as_rat(need(doc, "d", ""), "d");
    s.m = as_int(need(doc, "m", ""), "m");
    std::string reason = as_str(need(doc, "exit_reason", ""), "exit_reason");
    if (reason == "all_placed")
        s.exit_reason = ExitReason::all_placed;
    else if (reason == "insufficient_for_dedicated")
        s.exit_reason = ExitReason::insufficient_for_dedicated;
    else if (reason == "insufficient_for_group")
        s.exit_reason = ExitReason::insufficient_for_group;
    else
        throw SchemaError("exit_reason", "unknown exit reason '" + reason + "'");
    const json& arr = need(doc, "placements", "");
    if (!arr.is_array()) throw SchemaError("placements", "expected an array");
    for (size_t i = 0; i < arr.size(); ++i) {
        std::string where = "placements[" + std::to_string(i) + "]";
        const json& pv = arr[i];
        reject_unknown(pv, {"task", "first_processor", "width", "start", "end"}, where);
        Placement p;
        p.task_id = as_int(need(pv, "task", where), where + ".task");
        p.first_processor =
            as_int(need(pv, "first_processor", where), where + ".first_processor");
        p.width = as_int(need(pv, "width", where), where + ".width");
        p.start = as_rat(need(pv, "start", where), where + ".start");
        p.end = as_rat(need(pv, "end", where), where + ".end");
        s.placements.push_back(std::move(p));
    }
    const json& rej = need(doc, "rejected", "");
    if (!rej.is_array()) throw SchemaError("rejected", "expected an array");
    for (size_t i = 0; i < rej.size(); ++i)
        s.rejected.push_back(as_int(rej[i], "rejected[" + std::to_string(i) + "]"));
    return s;
}

std::string schedule_to_json(const Schedule& schedule) {
    json doc;
    doc["d"] = rat_json(schedule.d);
    doc["m"] = schedule.m;
    doc["exit_reason"] = to_string(schedule.exit_reason);
    doc["placements"] = json::array();
    for (const Placement& p : schedule.placements) {
        json pv;
        pv["task"] = p.task_id;
        pv["first_processor"] = p.first_processor;
        pv["width"] = p.width;
        pv["start"] = rat_json(p.start);
        pv["end"] = rat_json(p.end);
        doc["placements"].push_back(std::move(pv));
    }
    doc["rejected"] = schedule.rejected;
    return doc.dump(2) + "\n";
}

GeneratorSpec parse_generator_spec(const std::string& text) {
    json doc = parse_document(text);
    if (!doc.is_object()) throw SchemaError("", "generator spec must be an object");
    reject_unknown(doc,
                   {"n", "delta", "k", "m", "workload_range", "growth_range",
                    "value_range", "seed"},
                   "");
    GeneratorSpec spec;
    spec.n = as_int(need(doc, "n", ""), "n");
    spec.delta = as_int(need(doc, "delta", ""), "delta");
    spec.k = as_int(need(doc, "k", ""), "k");
    spec.m = as_int(need(doc, "m", ""), "m");
    auto range = [&](const char* key, Rat& lo, Rat& hi) {
        const json& v = need(doc, key, "");
        if (!v.is_array() || v.size() != 2)
            throw SchemaError(key, "expected [min, max]");
        lo = as_rat(v[0], std::string(key) + "[0]");
        hi = as_rat(v[1], std::string(key) + "[1]");
    };
    range("workload_range", spec.workload_min, spec.workload_max);
    range("growth_range", spec.growth_min, spec.growth_max);
    if (doc.contains("value_range")) {
        const json& v = doc["value_range"];
        if (!v.is_array() || v.size() != 2)
            throw SchemaError("value_range", "expected [min, max]");
        spec.value_range = {as_rat(v[0], "value_range[0]"), as_rat(v[1], "value_range[1]")};
    }
    if (doc.contains("seed")) {
        const json& v = doc["seed"];
        if (!v.is_number_unsigned() && !v.is_number_integer())
            throw SchemaError("seed", "expected an integer");
        spec.seed = v.get<std::uint64_t>();
    }
    return spec;
}

std::string generator_spec_to_json(const GeneratorSpec& spec) {
    json doc;
    doc["n"] = spec.n;
    doc["delta"] = spec.delta;
    doc["k"] = spec.k;
    doc["m"] = spec.m;
    doc["workload_range"] = {to_string(spec.workload_min), to_string(spec.workload_max)};
    doc["growth_range"] = {to_string(spec.growth_min), to_string(spec.growth_max)};
    if (spec.value_range)
        doc["value_range"] = {to_string(spec.value_range->first),
                              to_string(spec.value_range->second)};
    doc["seed"] = spec.seed;
    return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError(path, "cannot open file");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SchemaError(path, "cannot open file for writing");
    out << content;
}

TaskSet load_instance(const std::string& path) { return parse_instance(read_file(path)); }
void save_instance(const TaskSet& tasks, const std::string& path) {
    write_file(path, instance_to_json(tasks));
}
Schedule load_schedule(const std::string& path) { return parse_schedule(read_file(path)); }
void save_schedule(const Schedule& schedule, const std::string& path) {
    write_file(path, schedule_to_json(schedule));
}
GeneratorSpec load_generator_spec(const std::string& path) {
    return parse_generator_spec(read_file(path));
}

} // namespace moldsched
