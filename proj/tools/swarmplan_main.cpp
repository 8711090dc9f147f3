// swarmplan: scenario-driven CLI for B-spline swarm trajectory optimization.
//
// Exit codes: 0 success, 1 config/validation error, 2 empty trajectory pool,
// 3 oracle refusal, 4 mission failure.

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "swarmplan/allocation.hpp"
#include "swarmplan/benchfx.hpp"
#include "swarmplan/errors.hpp"
#include "swarmplan/leg_planner.hpp"
#include "swarmplan/mission.hpp"
#include "swarmplan/util.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace swarmplan;

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitEmptyPool = 2;
constexpr int kExitOracleRefused = 3;
constexpr int kExitMission = 4;

struct GlobalOptions {
    std::uint64_t seed = 0;
    std::string out_dir = "swarmplan_out";
    int iterations = 200;
    int samples = 50;
    bool quiet = false;
};

std::string utc_timestamp() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

// The manifest is written before any computation so a crashed run still
// identifies itself.
void write_manifest(const GlobalOptions& opts, const std::string& command,
                    const std::vector<std::string>& config_paths) {
    fs::create_directories(opts.out_dir);
    json doc{{"command", command},
             {"configs", config_paths},
             {"seed", opts.seed},
             {"version", kVersion},
             {"started_utc", utc_timestamp()},
             {"out_dir", opts.out_dir}};
    std::ofstream(fs::path(opts.out_dir) / "manifest.json") << doc.dump(2) << "\n";
}

json cost_to_json(const CostBreakdown& c) {
    return {{"distance", c.distance}, {"safety", c.safety},   {"collision", c.collision},
            {"energy", c.energy},     {"time", c.time},       {"total", c.total}};
}

json allocation_cost_to_json(const AllocationCost& c) {
    return {{"total_distance", c.total_distance},
            {"max_time", c.max_time},
            {"energy_violation", c.energy_violation},
            {"total", c.total}};
}

int cmd_plan(const GlobalOptions& opts, const std::string& scenario_path, int start_index,
             int goal_index, std::size_t pool_capacity) {
    write_manifest(opts, "plan", {scenario_path});
    const Scenario scenario = load_scenario_file(scenario_path);
    if (start_index < 0 || start_index >= scenario.uav_count())
        throw ValidationError("start index " + std::to_string(start_index) + " out of range");
    if (goal_index < 0 || goal_index >= scenario.task_count())
        throw ValidationError("goal task index " + std::to_string(goal_index) + " out of range");

    EncodingConfig encoding;
    encoding.n_samples = opts.samples;
    SwarmConfig swarm_template;
    LegPlanner planner(scenario.uav_starts[static_cast<std::size_t>(start_index)],
                       scenario.tasks[static_cast<std::size_t>(goal_index)], scenario,
                       swarm_template, encoding, pool_capacity, opts.seed);

    std::ofstream convergence(fs::path(opts.out_dir) / "convergence.csv");
    convergence << "iteration,gbest_fitness,entropy,w,c1,c2,pool_size\n";
    planner.metrics = [&convergence](const IterationRecord& rec) {
        convergence << rec.iteration << "," << format_double(rec.gbest_fitness) << ","
                    << format_double(rec.entropy) << "," << format_double(rec.w) << ","
                    << format_double(rec.c1) << "," << format_double(rec.c2) << ","
                    << rec.pool_size << "\n";
    };

    const ReplanOutcome outcome = planner.replan(opts.iterations);
    if (!outcome.decision) {
        if (!opts.quiet)
            std::cerr << "no legal trajectory in the pool after " << outcome.iterations
                      << " iterations\n";
        return kExitEmptyPool;
    }

    const SampledPath path = planner.decode_path(*outcome.decision);
    const CostBreakdown cost = planner.cost_of(*outcome.decision);
    {
        std::ofstream csv(fs::path(opts.out_dir) / "trajectory.csv");
        csv << "u,x,y,z\n";
        for (std::size_t s = 0; s < path.size(); ++s)
            csv << format_double(path.params[s]) << "," << format_double(path.positions[s].x) << ","
                << format_double(path.positions[s].y) << "," << format_double(path.positions[s].z)
                << "\n";
    }
    {
        json doc = cost_to_json(cost);
        doc["iterations"] = outcome.iterations;
        doc["iterations_to_first_legal"] = outcome.iterations_to_first_legal;
        doc["legal"] = true;
        std::ofstream(fs::path(opts.out_dir) / "cost.json") << doc.dump(2) << "\n";
    }
    if (!opts.quiet)
        std::cout << "trajectory found: length " << cost.distance << " m, total cost " << cost.total
                  << " (outputs in " << opts.out_dir << ")\n";
    return kExitOk;
}

int cmd_allocate(const GlobalOptions& opts, const std::string& scenario_path, bool oracle,
                 int population, int generations) {
    write_manifest(opts, "allocate", {scenario_path});
    const Scenario scenario = load_scenario_file(scenario_path);
    GaConfig ga;
    ga.population = population;
    ga.generations = generations;
    ga.rng_seed = opts.seed;
    const AllocationResult result = solve_allocation(scenario, ga);

    json doc;
    doc["tours"] = json::array();
    for (const auto& tour : result.assignment.tours) doc["tours"].push_back(tour);
    doc["cost"] = allocation_cost_to_json(result.cost);
    if (oracle) {
        const AllocationResult exact = brute_force_allocation(scenario);
        doc["oracle"] = {{"tours", exact.assignment.tours},
                         {"cost", allocation_cost_to_json(exact.cost)},
                         {"gap", result.cost.total - exact.cost.total}};
    }
    std::ofstream(fs::path(opts.out_dir) / "assignment.json") << doc.dump(2) << "\n";
    if (!opts.quiet) {
        std::cout << "allocation total cost " << result.cost.total;
        if (oracle) std::cout << " (oracle gap " << doc["oracle"]["gap"].get<double>() << ")";
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_mission(const GlobalOptions& opts, const std::string& config_path,
                const std::string& budget_mode, int replan_iterations) {
    write_manifest(opts, "mission", {config_path});
    MissionConfig config = load_mission_config_file(config_path);
    config.seed = opts.seed;
    config.budget_mode = budget_mode == "wallclock" ? BudgetMode::WallClock
                                                    : BudgetMode::Iterations;
    if (replan_iterations > 0) config.replan_iterations = replan_iterations;
    const MissionLog log = run_mission(config);
    write_mission_log(log, config, opts.out_dir);
    if (!opts.quiet)
        std::cout << (log.completed ? "mission completed" : "mission timed out") << " at t="
                  << log.end_time << " s; " << log.accepted.size() << " accepted trajectories, "
                  << log.replans.size() << " replans (outputs in " << opts.out_dir << ")\n";
    return kExitOk;
}

int cmd_bench(const GlobalOptions& opts, const std::vector<std::string>& functions, int seeds,
              int dimension) {
    write_manifest(opts, "bench", {});
    ComparisonConfig config;
    config.functions = functions;
    config.n_seeds = seeds;
    config.dimension = dimension;
    config.iterations = opts.iterations;
    config.base_seed = opts.seed == 0 ? 1 : opts.seed;
    const ComparisonReport report = run_comparison(config);
    {
        std::ofstream csv(fs::path(opts.out_dir) / "bench_report.csv");
        write_bench_report(report.rows, csv);
    }
    if (!opts.quiet) std::cout << format_comparison_table(report.rows);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"swarmplan: B-spline swarm trajectory optimization toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--seed", opts.seed, "RNG seed (default 0)");
    app.add_option("--out-dir", opts.out_dir, "output directory (default swarmplan_out)");
    app.add_option("--iterations", opts.iterations, "optimizer iteration budget (default 200)");
    app.add_option("--samples", opts.samples, "trajectory sampling resolution (default 50)");
    app.add_flag("--quiet", opts.quiet, "suppress progress output");

    std::string scenario_path, mission_path;
    int start_index = 0, goal_index = 0;
    std::size_t pool_capacity = 50;
    bool oracle = false;
    int population = 50, generations = 200;
    std::string budget_mode = "iterations";
    int replan_iterations = 0;
    std::vector<std::string> functions;
    int seeds = 10, dimension = 10;

    CLI::App* plan = app.add_subcommand(
        "plan", "plan a single-UAV trajectory for one start->task leg");
    plan->add_option("scenario", scenario_path, "scenario JSON file")->required();
    plan->add_option("--start", start_index, "UAV index (default 0)");
    plan->add_option("--goal", goal_index, "task index (default 0)");
    plan->add_option("--pool-capacity", pool_capacity, "trajectory pool capacity (default 50)");

    CLI::App* allocate = app.add_subcommand("allocate", "assign tasks to UAVs with the GA solver");
    allocate->add_option("scenario", scenario_path, "scenario JSON file")->required();
    allocate->add_flag("--oracle", oracle,
                       "cross-check against the exhaustive solver (small instances)");
    allocate->add_option("--population", population, "GA population (default 50)");
    allocate->add_option("--generations", generations, "GA generations (default 200)");

    CLI::App* mission = app.add_subcommand("mission", "run a full multi-UAV mission simulation");
    mission->add_option("config", mission_path, "mission config JSON file")->required();
    mission->add_option("--budget-mode", budget_mode, "iterations | wallclock (default iterations)")
        ->check(CLI::IsMember({"iterations", "wallclock"}));
    mission->add_option("--replan-iterations", replan_iterations,
                        "override the per-replan iteration budget");

    CLI::App* bench = app.add_subcommand("bench", "compare PE-PSO against the vanilla baseline");
    bench->add_option("--functions", functions,
                      "benchmark subset (default: sphere rosenbrock rastrigin ackley griewank "
                      "schwefel)");
    bench->add_option("--seeds", seeds, "seeds per (function, optimizer); must be >= 2");
    bench->add_option("--dimension", dimension, "problem dimension (default 10)");

    app.footer(scenario_schema_help() + "\n\n" + mission_config_schema_help() +
               "\n\nEnvironment: SWARMPLAN_THREADS caps internal parallelism (0 = auto).");

    CLI11_PARSE(app, argc, argv);

    try {
        if (plan->parsed()) return cmd_plan(opts, scenario_path, start_index, goal_index, pool_capacity);
        if (allocate->parsed()) return cmd_allocate(opts, scenario_path, oracle, population, generations);
        if (mission->parsed()) return cmd_mission(opts, mission_path, budget_mode, replan_iterations);
        if (bench->parsed()) return cmd_bench(opts, functions, seeds, dimension);
    } catch (const OracleRefusedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOracleRefused;
    } catch (const MissionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMission;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
