#include "moldsched/reports.hpp"

#include <json.hpp>

namespace moldsched {

using json = nlohmann::ordered_json;

namespace {

json rs(const Rat& r) { return json(to_string(r)); }

// Every report echoes the constants it was computed with so a run can be
// reproduced from its output alone.
void put_params(json& doc, const ParamSet& p, int m, int k) {
    doc["delta"] = p.delta;
    doc["H"] = p.H;
    doc["nu"] = p.nu;
    doc["delta_prime"] = p.delta_prime;
    doc["r"] = rs(p.r);
    json xs;
    for (const auto& [h, x] : p.x) xs[std::to_string(h)] = x;
    doc["x"] = std::move(xs);
    UtilizationBound b = theta_bound(p);
    doc["mu"] = rs(b.mu);
    doc["beta1"] = rs(b.beta1);
    doc["beta2"] = rs(b.beta2);
    if (m >= 1 && k >= 1) doc["theta"] = rs(b.theta(m, k));
}

} // namespace

std::string params_report(int delta, int m, int k) {
    json doc;
    put_params(doc, search_params(delta), m, k);
    return doc.dump(2) + "\n";
}

std::string classify_report(const TaskSet& tasks, const Rat& d) {
    ParamSet p = search_params(tasks.delta);
    Classification cls = classify(tasks, d, p);
    json doc;
    doc["d"] = rs(d);
    doc["m"] = tasks.m;
    doc["k"] = tasks.k;
    doc["n"] = tasks.tasks.size();
    put_params(doc, p, tasks.m, tasks.k);
    json ded = json::array();
    for (const auto& [id, width] : cls.dedicated)
        ded.push_back(json{{"task", id}, {"width", width}});
    doc["dedicated"] = std::move(ded);
    json grouped;
    for (const auto& [h, ids] : cls.grouped) grouped[std::to_string(h)] = ids;
    doc["grouped"] = std::move(grouped);
    doc["filler"] = cls.filler;
    doc["infeasible"] = cls.infeasible;
    return doc.dump(2) + "\n";
}

Schedule schedule_for_report(const TaskSet& tasks, const Rat& d,
                             std::optional<std::uint64_t> shuffle_seed) {
    return schedule_tasks(tasks, d, search_params(tasks.delta), shuffle_seed);
}

std::string schedule_report(const TaskSet& tasks, const Rat& d,
                            std::optional<std::uint64_t> shuffle_seed) {
    ParamSet p = search_params(tasks.delta);
    Schedule s = schedule_tasks(tasks, d, p, shuffle_seed);
    json doc;
    doc["d"] = rs(d);
    doc["m"] = tasks.m;
    doc["k"] = tasks.k;
    doc["n"] = tasks.tasks.size();
    put_params(doc, p, tasks.m, tasks.k);
    doc["exit_reason"] = to_string(s.exit_reason);
    doc["placed"] = s.placements.size();
    doc["rejected"] = s.rejected.size();
    doc["utilization"] = rs(utilization(s));
    return doc.dump(2) + "\n";
}

std::string makespan_report(const TaskSet& tasks, const Rat& epsilon) {
    ParamSet p = search_params(tasks.delta);
    MakespanResult r = minimize_makespan(tasks, p, epsilon);
    json doc;
    doc["m"] = tasks.m;
    doc["k"] = tasks.k;
    doc["n"] = tasks.tasks.size();
    put_params(doc, p, tasks.m, tasks.k);
    doc["epsilon"] = rs(r.epsilon);
    doc["U"] = rs(r.U);
    doc["L"] = rs(r.L);
    doc["U0"] = rs(r.U0);
    doc["L0"] = rs(r.L0);
    doc["iterations"] = r.iterations;
    doc["fast_exit"] = r.fast_exit;
    doc["lower_bound"] = rs(r.lower_bound);
    doc["ratio_u_lb"] = rs(r.U / r.lower_bound);
    doc["utilization"] = rs(utilization(r.schedule));
    return doc.dump(2) + "\n";
}

std::string welfare_report(const TaskSet& tasks, const Rat& tau) {
    ParamSet p = search_params(tasks.delta);
    WelfareResult r = maximize_welfare(tasks, tau, p);
    json doc;
    doc["tau"] = rs(tau);
    doc["m"] = tasks.m;
    doc["k"] = tasks.k;
    doc["n"] = tasks.tasks.size();
    put_params(doc, p, tasks.m, tasks.k);
    doc["accepted"] = r.accepted;
    doc["dropped_infeasible"] = r.dropped_infeasible;
    doc["welfare"] = rs(r.welfare);
    doc["omega"] = rs(r.omega);
    doc["alpha"] = rs(r.alpha);
    doc["upper_bound"] = rs(r.upper_bound);
    doc["ratio_welfare_ub"] =
        rs(r.upper_bound > 0 ? r.welfare / r.upper_bound : Rat(1));
    return doc.dump(2) + "\n";
}

std::string tables_report() {
    json doc = json::array();
    for (const TableCheck& c : verify_tables()) {
        json row;
        row["delta"] = c.delta;
        row["expected_mu"] = rs(c.expected_mu);
        row["mu"] = rs(c.got_mu);
        row["expected_beta2"] = rs(c.expected_beta2);
        row["beta2"] = rs(c.got_beta2);
        row["ok"] = c.ok;
        doc.push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

} // namespace moldsched
