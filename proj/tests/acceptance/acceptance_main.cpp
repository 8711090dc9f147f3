// Acceptance suite: one verifiable criterion per numbered check, each printing
// a PASS/FAIL line with its measured values. Exit code is the failure count.
//
// Usage: acceptance [N | all]   (default: all)
// Criterion 10 shells out to the CLI named by $SWARMPLAN_CLI.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "swarmplan/allocation.hpp"
#include "swarmplan/benchfx.hpp"
#include "swarmplan/environment.hpp"
#include "swarmplan/geometry.hpp"
#include "swarmplan/leg_planner.hpp"
#include "swarmplan/mission.hpp"
#include "swarmplan/objectives.hpp"
#include "swarmplan/pe_pso.hpp"

namespace fs = std::filesystem;
using namespace swarmplan;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

// The 3-UAV / 5-task / 5-obstacle mission scenario used by criteria 6 and 10.
Scenario mission_scenario() {
    Scenario s;
    s.bounds = {{0, 0, 0}, {100, 100, 30}};
    s.obstacles = {{{35, 25, 8}, 6},
                   {{55, 40, 10}, 7},
                   {{45, 60, 10}, 6},
                   {{65, 70, 8}, 6},
                   {{50, 15, 8}, 5}};
    s.uav_starts = {{5, 20, 5}, {5, 50, 5}, {5, 80, 5}};
    s.energy_budgets = {500, 500, 500};
    s.tasks = {{90, 15, 8}, {85, 35, 10}, {95, 50, 12}, {85, 65, 10}, {90, 85, 8}};
    s.r_safe = 1.5;
    s.cruise_speed = 5.0;
    s.trajectory_weights = {1.0, 50.0, 5.0, 0.01, 1.0};
    s.energy_alpha = 1.0;
    s.energy_beta = 0.01;
    return s;
}

double sphere_fn(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

// --- criterion 1: B-spline property suite --------------------------------

Outcome criterion1() {
    const auto t0 = clock_type::now();
    std::mt19937_64 rng(10101);
    const double tol = 1e-9;
    int violations = 0;
    const int cases = 1000;
    for (int rep = 0; rep < cases; ++rep) {
        const int order = std::uniform_int_distribution<int>(2, 6)(rng);
        const int n_control = order + std::uniform_int_distribution<int>(0, 9)(rng);
        std::vector<Vec3> control;
        for (int i = 0; i < n_control; ++i)
            control.push_back({uniform(rng, -50, 50), uniform(rng, -50, 50), uniform(rng, -50, 50)});
        const Vec3 first = control.front(), last = control.back();
        const BSplineTrajectory traj = BSplineTrajectory::clamped(order, std::move(control));
        const double u = uniform(rng, traj.domain_start(), traj.domain_end());
        const KnotVector& knots = traj.knots();

        double sum = 0.0;
        for (int i = 0; i < n_control; ++i) {
            const double b = basis(static_cast<std::size_t>(i), order, u, knots);
            if (b < 0.0) ++violations;                                      // non-negativity
            if ((u < knots[static_cast<std::size_t>(i)] ||
                 u > knots[static_cast<std::size_t>(i + order)]) &&
                b != 0.0)
                ++violations;                                               // local support
            sum += b;
        }
        if (std::abs(sum - 1.0) > tol) ++violations;                        // partition of unity

        const Vec3 p = traj.evaluate(u);                                    // convex hull
        Vec3 lo = traj.control_points()[0], hi = lo;
        for (const Vec3& c : traj.control_points()) {
            lo = {std::min(lo.x, c.x), std::min(lo.y, c.y), std::min(lo.z, c.z)};
            hi = {std::max(hi.x, c.x), std::max(hi.y, c.y), std::max(hi.z, c.z)};
        }
        if (p.x < lo.x - tol || p.x > hi.x + tol || p.y < lo.y - tol || p.y > hi.y + tol ||
            p.z < lo.z - tol || p.z > hi.z + tol)
            ++violations;

        if (distance(traj.evaluate(traj.domain_start()), first) > tol) ++violations;
        if (distance(traj.evaluate(traj.domain_end()), last) > tol) ++violations;
    }
    const double elapsed = seconds_since(t0);
    Outcome out;
    out.pass = violations == 0 && elapsed < 10.0;
    std::ostringstream msg;
    msg << cases << " randomized cases, " << violations << " violations, " << std::fixed
        << std::setprecision(2) << elapsed << " s (< 10 s)";
    out.detail = msg.str();
    return out;
}

// --- criterion 2: entropy oracle and parameter schedule ------------------

// Direct histogram oracle: explicit per-bin interval counting.
double entropy_oracle(const std::vector<double>& values, int bins) {
    std::vector<double> finite;
    for (double v : values)
        if (std::isfinite(v)) finite.push_back(v);
    const double lo = *std::min_element(finite.begin(), finite.end());
    const double hi = *std::max_element(finite.begin(), finite.end());
    if (hi == lo) return 0.0;
    double entropy = 0.0;
    for (int j = 0; j < bins; ++j) {
        const double left = lo + (hi - lo) * (static_cast<double>(j) / bins);
        const double right = lo + (hi - lo) * (static_cast<double>(j + 1) / bins);
        std::size_t count = 0;
        for (double v : finite) {
            const bool in = j + 1 == bins ? (v >= left && v <= hi) : (v >= left && v < right);
            if (in) ++count;
        }
        if (count == 0) continue;
        const double q = static_cast<double>(count) / static_cast<double>(finite.size());
        entropy -= q * std::log(q);
    }
    return entropy;
}

Outcome criterion2() {
    std::mt19937_64 rng(2222);
    int mismatches = 0;
    double worst = 0.0;
    for (int rep = 0; rep < 1000; ++rep) {
        const int bins = std::uniform_int_distribution<int>(2, 20)(rng);
        const int n = std::uniform_int_distribution<int>(1, 300)(rng);
        std::vector<double> f;
        for (int i = 0; i < n; ++i) f.push_back(uniform(rng, -500.0, 500.0));
        if (rep % 5 == 0) f.assign(static_cast<std::size_t>(n), 3.25); // degenerate set
        const double got = compute_entropy(f, bins);
        const double want = entropy_oracle(f, bins);
        worst = std::max(worst, std::abs(got - want));
        if (std::abs(got - want) > 1e-12) ++mismatches;
    }

    SwarmConfig config;
    config.bounds = BoundsNd::uniform(2, -1.0, 1.0);
    config.entropy_bins = 10;
    const double h_max = std::log(10.0);
    const PsoParams at0 = adapt_params(0.0, config);
    const PsoParams at1 = adapt_params(h_max, config);
    const PsoParams mid = adapt_params(h_max / 2.0, config);
    const bool endpoints = at0.w == 0.4 && at0.c1 == 2.0 && at0.c2 == 1.0 && at1.w == 0.9 &&
                           at1.c1 == 1.0 && at1.c2 == 2.0;
    const bool midpoint = std::abs(mid.w - 0.65) < 1e-15 && std::abs(mid.c1 - 1.5) < 1e-15 &&
                          std::abs(mid.c2 - 1.5) < 1e-15;

    Outcome out;
    out.pass = mismatches == 0 && endpoints && midpoint;
    std::ostringstream msg;
    msg << "1000 oracle comparisons, max |diff| " << std::scientific << std::setprecision(2)
        << worst << " (<= 1e-12), endpoints " << (endpoints ? "exact" : "WRONG") << ", midpoint "
        << (midpoint ? "{0.65, 1.5, 1.5}" : "WRONG");
    out.detail = msg.str();
    return out;
}

// --- criterion 3: persistent-exploration contract -------------------------

Outcome criterion3() {
    const int dim = 10;
    int reinit_violations = 0, bound_violations = 0, gbest_violations = 0;
    int total_steps = 0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        SwarmConfig config =
            SwarmConfig::defaults(BoundsNd::uniform(dim, -100.0, 100.0), seed);
        SwarmState state = init_swarm(config);
        const EvalFn eval = [](std::span<const double> x) { return Evaluation{sphere_fn(x)}; };
        double last_gbest = std::numeric_limits<double>::infinity();
        for (int it = 0; it < 100; ++it) {
            int reported = -1;
            const MetricsSink sink = [&](const IterationRecord& rec) {
                reported = rec.n_reinitialized;
            };
            step(state, eval, config, nullptr, sink);
            ++total_steps;
            if (reported != 50) ++reinit_violations;
            if (state.gbest_fitness > last_gbest) ++gbest_violations;
            last_gbest = state.gbest_fitness;
            for (const Particle& p : state.particles)
                for (int d = 0; d < dim; ++d)
                    if (p.position[static_cast<std::size_t>(d)] < -100.0 ||
                        p.position[static_cast<std::size_t>(d)] > 100.0)
                        ++bound_violations;
        }
    }
    Outcome out;
    out.pass = reinit_violations == 0 && bound_violations == 0 && gbest_violations == 0;
    std::ostringstream msg;
    msg << total_steps << " steps (N=100, alpha=0.5): " << reinit_violations
        << " reinit-count violations, " << bound_violations << " bound violations, "
        << gbest_violations << " gbest regressions";
    out.detail = msg.str();
    return out;
}

// --- criterion 4: optimizer sanity on the sphere ---------------------------

Outcome criterion4() {
    const auto t0 = clock_type::now();
    double sum = 0.0, worst = 0.0;
    const int seeds = 20;
    for (int seed = 0; seed < seeds; ++seed) {
        SwarmConfig config = SwarmConfig::defaults(BoundsNd::uniform(10, -100.0, 100.0),
                                                   static_cast<std::uint64_t>(seed));
        const MinimizeResult r = minimize(sphere_fn, config, 200);
        sum += r.best_fitness;
        worst = std::max(worst, r.best_fitness);
    }
    const double mean = sum / seeds;
    const double elapsed = seconds_since(t0);
    Outcome out;
    out.pass = mean < 1e-2 && elapsed < 60.0;
    std::ostringstream msg;
    msg << "sphere d=10: mean best " << std::scientific << std::setprecision(3) << mean
        << " (< 1e-2), worst " << worst << ", " << std::fixed << std::setprecision(1) << elapsed
        << " s (< 60 s)";
    out.detail = msg.str();
    return out;
}

// --- criterion 5: desk-scale optimizer comparison --------------------------

// One-sided Mann-Whitney rank test of PE < vanilla (normal approximation
// with tie and continuity corrections); returns the p-value.
double rank_test_p(const std::vector<double>& pe, const std::vector<double>& vanilla) {
    const double n = static_cast<double>(pe.size());
    const double m = static_cast<double>(vanilla.size());
    double u_stat = 0.0;
    for (double a : pe)
        for (double b : vanilla) {
            if (a < b) u_stat += 1.0;
            else if (a == b) u_stat += 0.5;
        }
    // ties over the pooled sample
    std::vector<double> pooled = pe;
    pooled.insert(pooled.end(), vanilla.begin(), vanilla.end());
    std::sort(pooled.begin(), pooled.end());
    double tie_term = 0.0;
    for (std::size_t i = 0; i < pooled.size();) {
        std::size_t j = i;
        while (j < pooled.size() && pooled[j] == pooled[i]) ++j;
        const double t = static_cast<double>(j - i);
        tie_term += t * (t * t - 1.0);
        i = j;
    }
    const double nm = n + m;
    const double mu = n * m / 2.0;
    const double sigma_sq = n * m / 12.0 * (nm + 1.0 - tie_term / (nm * (nm - 1.0)));
    if (sigma_sq <= 0.0) return 1.0;
    // U large = PE stochastically smaller; test that tail
    const double z = (u_stat - mu - 0.5) / std::sqrt(sigma_sq);
    return 0.5 * std::erfc(z / std::sqrt(2.0));
}

Outcome criterion5() {
    ComparisonConfig config;
    config.functions = {"rastrigin", "ackley"};
    config.dimension = 10;
    config.n_seeds = 20;
    config.iterations = 200;
    config.base_seed = 1;
    const ComparisonReport report = run_comparison(config);

    Outcome out;
    std::ostringstream msg;
    for (const std::string& fn : config.functions) {
        std::vector<double> pe, vanilla;
        for (const RunRecord& run : report.runs) {
            if (run.function != fn) continue;
            (run.optimizer == "pe_pso" ? pe : vanilla).push_back(run.final_fitness);
        }
        const double pe_mean = std::accumulate(pe.begin(), pe.end(), 0.0) / pe.size();
        const double va_mean = std::accumulate(vanilla.begin(), vanilla.end(), 0.0) / vanilla.size();
        const double p = rank_test_p(pe, vanilla);
        const bool fn_pass = pe_mean <= va_mean && p < 0.05;
        out.pass = out.pass && fn_pass;
        msg << fn << ": pe mean " << std::scientific << std::setprecision(3) << pe_mean
            << " vs vanilla " << va_mean << ", one-sided rank p=" << std::setprecision(3) << p
            << (fn_pass ? " ok" : " NOT significant/superior") << "; ";
    }
    out.detail = msg.str();
    return out;
}

// --- criterion 6: online latency on the mission scenario -------------------

Outcome criterion6() {
    const Scenario scenario = mission_scenario();
    const EncodingConfig encoding; // 6 free points = 18 dims, 50 samples

    auto parked = [&](const Vec3& at) {
        SampledPath path;
        for (int i = 0; i < encoding.n_samples; ++i) {
            path.params.push_back(i / double(encoding.n_samples - 1));
            path.positions.push_back(at);
            path.velocities.push_back({0, 0, 0});
        }
        return path;
    };

    int within_10 = 0;
    const int replans = 100;
    for (int seed = 0; seed < replans; ++seed) {
        const int uav = seed % scenario.uav_count();
        const int task = seed % scenario.task_count();
        std::vector<SampledPath> peers;
        for (int l = 0; l < scenario.uav_count(); ++l)
            if (l != uav) peers.push_back(parked(scenario.uav_starts[static_cast<std::size_t>(l)]));
        LegPlanner planner(scenario.uav_starts[static_cast<std::size_t>(uav)],
                           scenario.tasks[static_cast<std::size_t>(task)], scenario, SwarmConfig{},
                           encoding, 50, static_cast<std::uint64_t>(seed));
        planner.set_peers(peers);
        const ReplanOutcome outcome = planner.replan(10);
        if (outcome.iterations_to_first_legal >= 1 && outcome.iterations_to_first_legal <= 10)
            ++within_10;
    }

    // Per-iteration wall time: N=100 particles, 18-dim decisions, 50-sample
    // costs, with peers, averaged over 200 iterations.
    std::vector<SampledPath> peers{parked(scenario.uav_starts[1]), parked(scenario.uav_starts[2])};
    LegPlanner timing(scenario.uav_starts[0], scenario.tasks[2], scenario, SwarmConfig{}, encoding,
                      50, 12345);
    timing.set_peers(peers);
    const auto t0 = clock_type::now();
    const int iters = 200;
    timing.replan(iters);
    const double ms_per_iteration = seconds_since(t0) * 1000.0 / iters;

    Outcome out;
    const double hit_rate = 100.0 * within_10 / replans;
    out.pass = within_10 >= 95 && ms_per_iteration < 5.0;
    std::ostringstream msg;
    msg << "first legal pool entry <= 10 iterations in " << within_10 << "/" << replans << " ("
        << std::fixed << std::setprecision(0) << hit_rate << "% >= 95%), " << std::setprecision(3)
        << ms_per_iteration << " ms/iteration (< 5 ms)";
    out.detail = msg.str();
    return out;
}

// --- criterion 7: GA allocation vs the exhaustive oracle -------------------

Outcome criterion7() {
    const auto t0 = clock_type::now();
    std::mt19937_64 rng(7777);
    int matches = 0, beats = 0;
    const int instances = 50;
    for (int rep = 0; rep < instances; ++rep) {
        Scenario s;
        s.bounds = {{-100, -100, -100}, {100, 100, 100}};
        const int n_tasks = std::uniform_int_distribution<int>(2, 6)(rng);
        const int n_uavs = std::uniform_int_distribution<int>(1, 2)(rng);
        for (int k = 0; k < n_uavs; ++k)
            s.uav_starts.push_back({uniform(rng, -50, 50), uniform(rng, -50, 50), uniform(rng, -20, 20)});
        s.energy_budgets.assign(static_cast<std::size_t>(n_uavs), 1e9);
        for (int t = 0; t < n_tasks; ++t)
            s.tasks.push_back({uniform(rng, -50, 50), uniform(rng, -50, 50), uniform(rng, -20, 20)});
        s.r_safe = 1.0;
        s.cruise_speed = 5.0;

        GaConfig ga;
        ga.population = 50;
        ga.generations = 100;
        ga.rng_seed = static_cast<std::uint64_t>(rep) * 31 + 1;
        const AllocationResult got = solve_allocation(s, ga);
        const AllocationResult exact = brute_force_allocation(s);
        if (got.cost.total < exact.cost.total - 1e-9) ++beats;
        if (got.cost.total <= exact.cost.total + 1e-9) ++matches;
    }
    const double elapsed = seconds_since(t0);
    Outcome out;
    out.pass = beats == 0 && matches >= (instances * 8) / 10 && elapsed < 120.0;
    std::ostringstream msg;
    msg << "GA matched the oracle on " << matches << "/" << instances << " (>= 40), beat it "
        << beats << " times (must be 0), " << std::fixed << std::setprecision(1) << elapsed
        << " s (< 120 s)";
    out.detail = msg.str();
    return out;
}

// --- criterion 8: robustness across start positions ------------------------

Outcome criterion8() {
    Scenario scenario = mission_scenario();
    const Vec3 goal = scenario.tasks[2]; // (95, 50, 12)
    const std::vector<Vec3> starts = {
        {5, 20, 5}, {5, 40, 8}, {5, 60, 10}, {5, 80, 5}, {10, 50, 15}};
    int illegal = 0;
    double worst_cv = 0.0;
    std::ostringstream per_start;
    for (std::size_t si = 0; si < starts.size(); ++si) {
        std::vector<double> costs;
        for (int seed = 0; seed < 10; ++seed) {
            LegPlanner planner(starts[si], goal, scenario, SwarmConfig{}, EncodingConfig{}, 50,
                               static_cast<std::uint64_t>(1000 * si + seed));
            const ReplanOutcome outcome = planner.replan(120);
            if (!outcome.decision) {
                ++illegal;
                continue;
            }
            const SampledPath path = planner.decode_path(*outcome.decision);
            if (!planner.legal(path)) {
                ++illegal;
                continue;
            }
            costs.push_back(planner.cost_of(*outcome.decision).total);
        }
        if (costs.size() < 10) continue;
        const double mean = std::accumulate(costs.begin(), costs.end(), 0.0) / costs.size();
        double var = 0.0;
        for (double c : costs) var += (c - mean) * (c - mean);
        const double cv = std::sqrt(var / (costs.size() - 1)) / mean;
        worst_cv = std::max(worst_cv, cv);
        per_start << std::fixed << std::setprecision(1) << 100.0 * cv << "% ";
    }
    Outcome out;
    out.pass = illegal == 0 && worst_cv < 0.10;
    std::ostringstream msg;
    msg << "5 starts x 10 seeds: " << illegal << " illegal runs (must be 0), per-start CV [ "
        << per_start.str() << "], worst " << std::fixed << std::setprecision(1) << 100.0 * worst_cv
        << "% (< 10%)";
    out.detail = msg.str();
    return out;
}

// --- criterion 9: pool legality soundness -----------------------------------

Outcome criterion9() {
    const Scenario scenario = mission_scenario();
    const TrajectoryEncoding encoding(scenario.uav_starts[0], scenario.tasks[0], EncodingConfig{});
    const BoundsNd box = encoding.decision_bounds(scenario.bounds);
    TrajectoryPool pool(50);
    std::mt19937_64 rng(909090);
    int violations = 0, legal_inserted = 0;
    const int insertions = 10000;
    for (int rep = 0; rep < insertions; ++rep) {
        std::vector<double> decision(encoding.dimension());
        for (std::size_t d = 0; d < decision.size(); ++d)
            decision[d] = uniform(rng, box.lower[d], box.upper[d]);
        const SampledPath path = encoding.decode_path(decision);
        const bool legal =
            is_legal(path, scenario, scenario.uav_starts[0], scenario.tasks[0]);
        const double fitness = trajectory_cost(path, scenario).total;
        if (pool.insert(decision, fitness, legal)) ++legal_inserted;
        if (const PoolEntry* best = pool.best()) {
            const SampledPath best_path = encoding.decode_path(best->decision);
            if (!is_legal(best_path, scenario, scenario.uav_starts[0], scenario.tasks[0]))
                ++violations;
        }
    }
    Outcome out;
    out.pass = violations == 0 && legal_inserted > 0;
    std::ostringstream msg;
    msg << insertions << " randomized insertions (" << legal_inserted
        << " accepted), pool_best legality violations: " << violations;
    out.detail = msg.str();
    return out;
}

// --- criterion 10: end-to-end CLI determinism --------------------------------

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    if (!in) return "<missing " + p.string() + ">";
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Outcome criterion10() {
    Outcome out;
    const char* cli = std::getenv("SWARMPLAN_CLI");
    if (!cli) {
        out.pass = false;
        out.detail = "SWARMPLAN_CLI not set";
        return out;
    }
    const fs::path dir = fs::temp_directory_path() / "swarmplan_acceptance_c10";
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::ofstream(dir / "scenario.json") << save_scenario(mission_scenario());
    std::ofstream(dir / "mission.json") << R"({
      "scenario_path": "scenario.json",
      "replan_iterations": 40,
      "sim_step": 0.1,
      "max_sim_time": 120.0,
      "events": [
        {"time": 5.0, "action": "obstacle-add", "obstacle": {"center": [70, 48, 10], "radius": 6}}
      ],
      "ga": {"population": 40, "generations": 80}
    })";

    auto run = [&](const std::string& out_dir) {
        const std::string cmd = std::string(cli) + " --seed 42 --out-dir " + out_dir +
                                " --quiet mission --budget-mode iterations " +
                                (dir / "mission.json").string() + " >/dev/null 2>&1";
        return WEXITSTATUS(std::system(cmd.c_str()));
    };
    const int rc1 = run((dir / "run1").string());
    const int rc2 = run((dir / "run2").string());
    if (rc1 != 0 || rc2 != 0) {
        out.pass = false;
        out.detail = "mission runs exited " + std::to_string(rc1) + "/" + std::to_string(rc2);
        return out;
    }

    int compared = 0, mismatched = 0;
    for (const auto& entry : fs::directory_iterator(dir / "run1")) {
        const std::string name = entry.path().filename().string();
        const bool is_csv = name.size() > 4 && name.substr(name.size() - 4) == ".csv";
        if (!is_csv) continue;
        if (name != "latency.csv" && name.find("trajectory") == std::string::npos) continue;
        ++compared;
        if (slurp(entry.path()) != slurp(dir / "run2" / name)) ++mismatched;
    }
    out.pass = compared >= 2 && mismatched == 0;
    std::ostringstream msg;
    msg << compared << " trajectory/latency CSVs compared, " << mismatched << " byte mismatches";
    out.detail = msg.str();
    fs::remove_all(dir);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    const std::string which = argc > 1 ? argv[1] : "all";
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"B-spline property suite (1000 cases, 1e-9)", criterion1},
        {"entropy oracle (1e-12) and parameter-schedule endpoints/midpoint", criterion2},
        {"persistent-exploration contract (500 steps, floor(alpha N))", criterion3},
        {"sphere d=10 sanity: mean best < 1e-2 over 20 seeds", criterion4},
        {"rastrigin/ackley d=10: PE-PSO <= vanilla with rank test at 0.05", criterion5},
        {"online latency: legal pool entry <= 10 iterations, < 5 ms/iteration", criterion6},
        {"GA allocation matches oracle >= 80%, never beats it", criterion7},
        {"cost robustness across 5 starts: CV < 10%, all runs legal", criterion8},
        {"pool soundness over 10000 insertions: pool_best always legal", criterion9},
        {"byte-identical mission CSVs for two seed-42 CLI runs", criterion10},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int number = static_cast<int>(i) + 1;
        if (which != "all" && which != std::to_string(number)) continue;
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        if (!outcome.pass) ++failures;
        std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": "
                  << criteria[i].first << " -- " << outcome.detail << "\n";
    }
    return failures;
}
