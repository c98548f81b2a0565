// Command-line front end for the moldable-task scheduling toolkit.
//
// Exit codes: 0 success, 1 usage error, 2 infeasible input,
// 3 schema error, 4 internal invariant violation.

#include <CLI11.hpp>

#include "moldsched/io.hpp"
#include "moldsched/reports.hpp"
#include "moldsched/verify.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>

namespace {

using namespace moldsched;

constexpr int kExitInfeasible = 2;
constexpr int kExitSchema = 3;
constexpr int kExitInternal = 4;

struct CommonOut {
    std::string report_path;
    std::string schedule_path;
};

void emit(const std::string& report, const CommonOut& out) {
    std::cout << report;
    if (!out.report_path.empty()) write_file(out.report_path, report);
}

// Precedence for the generator seed: explicit flag, then MOLDSCHED_SEED,
// then the seed stored in the spec file.
std::uint64_t pick_seed(const CLI::Option* seed_opt, std::uint64_t flag_seed,
                        std::uint64_t spec_seed) {
    if (seed_opt->count() > 0) return flag_seed;
    if (const char* env = std::getenv("MOLDSCHED_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("MOLDSCHED_SEED", "not an unsigned integer");
        }
    }
    return spec_seed;
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
    auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            std::uint64_t s = std::stoull(text);
            return {s, s};
        }
        std::uint64_t a = std::stoull(text.substr(0, pos));
        std::uint64_t b = std::stoull(text.substr(pos + 2));
        if (b < a) throw std::invalid_argument("descending");
        return {a, b};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--seeds", "expected A..B with A <= B");
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Scheduling toolkit for moldable tasks with bounded-linear speedup"};
    app.require_subcommand(1);

    // params
    auto* cmd_params = app.add_subcommand("params", "Derive scheduling constants for delta");
    int params_delta = 5;
    int params_m = 0, params_k = 0;
    CommonOut params_out;
    cmd_params->add_option("--delta", params_delta, "Shared linear-speedup bound")
        ->required();
    cmd_params->add_option("--m", params_m, "Evaluate theta for this processor count");
    cmd_params->add_option("--k", params_k, "Evaluate theta for this parallelism bound");
    cmd_params->add_option("-o,--out", params_out.report_path, "Write the report here");
    cmd_params->callback([&] {
        if (params_delta < 1) throw std::domain_error("delta must be >= 1");
        emit(params_report(params_delta, params_m, params_k ? params_k : params_delta),
             params_out);
    });

    // classify
    auto* cmd_classify = app.add_subcommand("classify", "Partition an instance at a deadline");
    std::string classify_in, classify_d;
    CommonOut classify_out;
    cmd_classify->add_option("-i,--instance", classify_in, "Instance file")->required();
    cmd_classify->add_option("-d,--deadline", classify_d, "Deadline (rational)")->required();
    cmd_classify->add_option("-o,--out", classify_out.report_path, "Write the report here");
    cmd_classify->callback([&] {
        TaskSet tasks = load_instance(classify_in);
        emit(classify_report(tasks, parse_rational(classify_d)), classify_out);
    });

    // schedule
    auto* cmd_schedule = app.add_subcommand("schedule", "Build a schedule for a deadline");
    std::string schedule_in, schedule_d;
    std::uint64_t schedule_shuffle = 0;
    CommonOut schedule_out;
    cmd_schedule->add_option("-i,--instance", schedule_in, "Instance file")->required();
    cmd_schedule->add_option("-d,--deadline", schedule_d, "Deadline (rational)")->required();
    auto* shuffle_opt = cmd_schedule->add_option(
        "--shuffle-seed", schedule_shuffle, "Shuffle within classes with this seed");
    cmd_schedule->add_option("-o,--out", schedule_out.report_path, "Write the report here");
    cmd_schedule->add_option("--schedule-out", schedule_out.schedule_path,
                             "Write the schedule file here");
    cmd_schedule->callback([&] {
        TaskSet tasks = load_instance(schedule_in);
        Rat d = parse_rational(schedule_d);
        std::optional<std::uint64_t> shuffle;
        if (shuffle_opt->count() > 0) shuffle = schedule_shuffle;
        emit(schedule_report(tasks, d, shuffle), schedule_out);
        if (!schedule_out.schedule_path.empty())
            save_schedule(schedule_for_report(tasks, d, shuffle),
                          schedule_out.schedule_path);
    });

    // makespan
    auto* cmd_makespan = app.add_subcommand("makespan", "Minimize the makespan");
    std::string makespan_in, makespan_eps = "1/100";
    CommonOut makespan_out;
    cmd_makespan->add_option("-i,--instance", makespan_in, "Instance file")->required();
    cmd_makespan->add_option("--epsilon", makespan_eps, "Bisection slack in (0,1)");
    cmd_makespan->add_option("-o,--out", makespan_out.report_path, "Write the report here");
    cmd_makespan->add_option("--schedule-out", makespan_out.schedule_path,
                             "Write the final schedule here");
    cmd_makespan->callback([&] {
        TaskSet tasks = load_instance(makespan_in);
        Rat eps = parse_rational(makespan_eps);
        emit(makespan_report(tasks, eps), makespan_out);
        if (!makespan_out.schedule_path.empty()) {
            MakespanResult r = minimize_makespan(tasks, search_params(tasks.delta), eps);
            save_schedule(r.schedule, makespan_out.schedule_path);
        }
    });

    // welfare
    auto* cmd_welfare = app.add_subcommand("welfare", "Maximize total value by a deadline");
    std::string welfare_in, welfare_tau;
    CommonOut welfare_out;
    cmd_welfare->add_option("-i,--instance", welfare_in, "Instance file")->required();
    cmd_welfare->add_option("--tau", welfare_tau, "Common deadline (rational)")->required();
    cmd_welfare->add_option("-o,--out", welfare_out.report_path, "Write the report here");
    cmd_welfare->add_option("--schedule-out", welfare_out.schedule_path,
                            "Write the accepted schedule here");
    cmd_welfare->callback([&] {
        TaskSet tasks = load_instance(welfare_in);
        Rat tau = parse_rational(welfare_tau);
        emit(welfare_report(tasks, tau), welfare_out);
        if (!welfare_out.schedule_path.empty()) {
            WelfareResult r = maximize_welfare(tasks, tau, search_params(tasks.delta));
            save_schedule(r.schedule, welfare_out.schedule_path);
        }
    });

    // gen
    auto* cmd_gen = app.add_subcommand("gen", "Generate an instance from a spec file");
    std::string gen_spec, gen_out;
    std::uint64_t gen_seed = 0;
    cmd_gen->add_option("--spec", gen_spec, "Generator spec file")->required();
    auto* gen_seed_opt = cmd_gen->add_option("--seed", gen_seed, "Override the seed");
    cmd_gen->add_option("-o,--out", gen_out, "Instance file to write")->required();
    cmd_gen->callback([&] {
        GeneratorSpec spec = load_generator_spec(gen_spec);
        spec.seed = pick_seed(gen_seed_opt, gen_seed, spec.seed);
        save_instance(generate(spec), gen_out);
    });

    // verify
    auto* cmd_verify = app.add_subcommand(
        "verify", "Compare the algorithms against exhaustive solvers on tiny instances");
    std::string verify_seeds = "1..50";
    TinyVerifyConfig verify_cfg;
    cmd_verify->add_option("--seeds", verify_seeds, "Seed range A..B");
    cmd_verify->add_option("--delta", verify_cfg.delta, "Fix delta (default: cycle 2,3,5)");
    cmd_verify->add_option("--max-tasks", verify_cfg.max_tasks, "Oracle task limit");
    cmd_verify->add_option("--max-procs", verify_cfg.max_procs, "Oracle processor limit");
    cmd_verify->callback([&] {
        auto [lo, hi] = parse_seed_range(verify_seeds);
        long failures = 0, floor_misses = 0;
        for (std::uint64_t seed = lo; seed <= hi; ++seed) {
            TinyVerifyResult r = verify_tiny_instance(seed, verify_cfg);
            // Hard invariants gate the exit code; the welfare floor is a
            // known limitation of the greedy on small machines and is
            // reported without failing the run.
            bool ok = r.makespan_ok() && r.sandwich_ok && r.alpha_ok;
            bool floor_miss = r.rejected_feasible && !r.theta_welfare_ok;
            if (!ok) ++failures;
            if (floor_miss) ++floor_misses;
            std::cout << (ok ? "PASS" : "FAIL") << " seed=" << seed
                      << " delta=" << r.delta << " n=" << r.n << " m=" << r.m
                      << " U=" << to_string(r.U)
                      << " opt=" << to_string(r.optimum_makespan)
                      << " welfare=" << to_string(r.welfare)
                      << " opt_welfare=" << to_string(r.optimum_welfare);
            if (floor_miss) std::cout << "  [floor-miss: welfare < theta*optimum]";
            if (!ok) std::cout << "  [" << r.note << "]";
            std::cout << "\n";
        }
        std::cout << "verified " << (hi - lo + 1) << " seeds, " << failures
                  << " failures, " << floor_misses << " welfare floor misses\n";
        if (failures > 0)
            throw std::logic_error("oracle comparison found violations");
    });

    // tables
    auto* cmd_tables = app.add_subcommand(
        "tables", "Compare derived constants against the reference values");
    cmd_tables->callback([&] { std::cout << tables_report(); });

    CLI11_PARSE(app, argc, argv);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const moldsched::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const moldsched::InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::domain_error& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::logic_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
}
