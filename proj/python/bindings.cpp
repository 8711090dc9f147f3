#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "swarmplan/allocation.hpp"
#include "swarmplan/benchfx.hpp"
#include "swarmplan/environment.hpp"
#include "swarmplan/errors.hpp"
#include "swarmplan/geometry.hpp"
#include "swarmplan/leg_planner.hpp"
#include "swarmplan/mission.hpp"
#include "swarmplan/objectives.hpp"
#include "swarmplan/pe_pso.hpp"

namespace py = pybind11;
using namespace swarmplan;

namespace {

Vec3 to_vec3(const std::array<double, 3>& a) { return {a[0], a[1], a[2]}; }
std::array<double, 3> from_vec3(const Vec3& v) { return {v.x, v.y, v.z}; }

SampledPath path_from_lists(const std::vector<double>& params,
                            const std::vector<std::array<double, 3>>& positions,
                            const std::vector<std::array<double, 3>>& velocities) {
    SampledPath path;
    path.params = params;
    for (const auto& p : positions) path.positions.push_back(to_vec3(p));
    for (const auto& v : velocities) path.velocities.push_back(to_vec3(v));
    return path;
}

py::dict cost_dict(const CostBreakdown& c) {
    py::dict d;
    d["distance"] = c.distance;
    d["safety"] = c.safety;
    d["collision"] = c.collision;
    d["energy"] = c.energy;
    d["time"] = c.time;
    d["total"] = c.total;
    return d;
}

py::dict path_dict(const SampledPath& path) {
    py::dict d;
    d["params"] = path.params;
    std::vector<std::array<double, 3>> pos, vel;
    for (const Vec3& p : path.positions) pos.push_back(from_vec3(p));
    for (const Vec3& v : path.velocities) vel.push_back(from_vec3(v));
    d["positions"] = pos;
    d["velocities"] = vel;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "B-spline swarm trajectory optimization: PE-PSO planner, GA task "
              "allocation, mission simulation, benchmark harness";

    py::register_exception<Error>(m, "SwarmplanError");

    // geometry
    py::class_<BSplineTrajectory>(m, "BSpline")
        .def(py::init([](int order, const std::vector<std::array<double, 3>>& control) {
                 std::vector<Vec3> pts;
                 for (const auto& p : control) pts.push_back(to_vec3(p));
                 return BSplineTrajectory::clamped(order, std::move(pts));
             }),
             py::arg("order"), py::arg("control_points"),
             "Clamped uniform B-spline through the given 3D control points.")
        .def_property_readonly("order", &BSplineTrajectory::order)
        .def_property_readonly("domain",
                               [](const BSplineTrajectory& t) {
                                   return std::make_pair(t.domain_start(), t.domain_end());
                               })
        .def("evaluate",
             [](const BSplineTrajectory& t, double u) { return from_vec3(t.evaluate(u)); },
             py::arg("u"))
        .def("velocity",
             [](const BSplineTrajectory& t, double u) { return from_vec3(t.velocity(u)); },
             py::arg("u"))
        .def("sample",
             [](const BSplineTrajectory& t, int n, bool with_velocity) {
                 return path_dict(t.sample(n, with_velocity));
             },
             py::arg("n_samples"), py::arg("with_velocity") = false);

    m.def("make_clamped_knots",
          [](int n_control, int order) { return make_clamped_knots(n_control, order).values(); },
          py::arg("n_control"), py::arg("order"));
    m.def("basis",
          [](std::size_t i, int order, double u, const std::vector<double>& knots) {
              return basis(i, order, u, KnotVector(knots));
          },
          py::arg("i"), py::arg("order"), py::arg("u"), py::arg("knots"));
    m.def("arc_length",
          [](const std::vector<double>& params, const std::vector<std::array<double, 3>>& positions) {
              return arc_length(path_from_lists(params, positions, {}));
          },
          py::arg("params"), py::arg("positions"));

    // environment
    py::class_<Scenario>(m, "Scenario")
        .def_property_readonly("uav_count", &Scenario::uav_count)
        .def_property_readonly("task_count", &Scenario::task_count)
        .def_property_readonly("r_safe", [](const Scenario& s) { return s.r_safe; })
        .def_property_readonly("cruise_speed", [](const Scenario& s) { return s.cruise_speed; })
        .def_property_readonly("uav_starts",
                               [](const Scenario& s) {
                                   std::vector<std::array<double, 3>> out;
                                   for (const Vec3& p : s.uav_starts) out.push_back(from_vec3(p));
                                   return out;
                               })
        .def_property_readonly("tasks", [](const Scenario& s) {
            std::vector<std::array<double, 3>> out;
            for (const Vec3& p : s.tasks) out.push_back(from_vec3(p));
            return out;
        });

    m.def("load_scenario", &load_scenario, py::arg("json_text"));
    m.def("load_scenario_file", &load_scenario_file, py::arg("path"));
    m.def("save_scenario", &save_scenario, py::arg("scenario"));
    m.def("clearance",
          [](const std::array<double, 3>& p, const Scenario& s) { return clearance(to_vec3(p), s); },
          py::arg("point"), py::arg("scenario"));

    // objectives
    m.def("trajectory_cost",
          [](const Scenario& scenario, const std::vector<double>& params,
             const std::vector<std::array<double, 3>>& positions,
             const std::vector<std::array<double, 3>>& velocities,
             const std::vector<std::vector<std::array<double, 3>>>& peers) {
              const SampledPath path = path_from_lists(params, positions, velocities);
              std::vector<SampledPath> peer_paths;
              for (const auto& peer : peers)
                  peer_paths.push_back(path_from_lists(params, peer, {}));
              return cost_dict(trajectory_cost(path, scenario, peer_paths));
          },
          py::arg("scenario"), py::arg("params"), py::arg("positions"), py::arg("velocities"),
          py::arg("peers") = std::vector<std::vector<std::array<double, 3>>>{});
    m.def("is_legal",
          [](const Scenario& scenario, const std::vector<double>& params,
             const std::vector<std::array<double, 3>>& positions,
             const std::array<double, 3>& start, const std::array<double, 3>& goal) {
              return is_legal(path_from_lists(params, positions, {}), scenario, to_vec3(start),
                              to_vec3(goal));
          },
          py::arg("scenario"), py::arg("params"), py::arg("positions"), py::arg("start"),
          py::arg("goal"));

    // pe_pso
    m.def("compute_entropy",
          [](const std::vector<double>& f, int bins) { return compute_entropy(f, bins); },
          py::arg("fitnesses"), py::arg("bins") = 10);
    m.def("adapt_params",
          [](double entropy, int bins) {
              SwarmConfig config;
              config.bounds = BoundsNd::uniform(1, 0.0, 1.0);
              config.entropy_bins = bins;
              const PsoParams p = adapt_params(entropy, config);
              return std::make_tuple(p.w, p.c1, p.c2);
          },
          py::arg("entropy"), py::arg("bins") = 10,
          "Entropy-linear (w, c1, c2) schedule over the default ranges.");
    m.def("select_worst",
          [](const std::vector<double>& f, double reset_rate) { return select_worst(f, reset_rate); },
          py::arg("fitnesses"), py::arg("reset_rate") = 0.5);
    m.def("minimize",
          [](const std::function<double(std::vector<double>)>& fn, std::vector<double> lower,
             std::vector<double> upper, int iterations, std::uint64_t seed, int particles,
             bool vanilla) {
              BoundsNd bounds{std::move(lower), std::move(upper)};
              SwarmConfig config = vanilla ? SwarmConfig::vanilla(bounds, seed)
                                           : SwarmConfig::defaults(bounds, seed);
              config.n_particles = particles;
              const FitnessFn objective = [&fn](std::span<const double> x) {
                  return fn(std::vector<double>(x.begin(), x.end()));
              };
              const MinimizeResult r = minimize(objective, config, iterations);
              return std::make_pair(r.best, r.best_fitness);
          },
          py::arg("fn"), py::arg("lower"), py::arg("upper"), py::arg("iterations") = 200,
          py::arg("seed") = 0, py::arg("particles") = 100, py::arg("vanilla") = false,
          "Minimize a python callable over a box; returns (best_x, best_f).");
    m.def("minimize_benchmark",
          [](const std::string& name, int dimension, int iterations, std::uint64_t seed,
             bool vanilla) {
              const BenchmarkFunction fn = make_benchmark(name, dimension);
              const BoundsNd bounds =
                  BoundsNd::uniform(static_cast<std::size_t>(dimension), fn.lower, fn.upper);
              SwarmConfig config = vanilla ? SwarmConfig::vanilla(bounds, seed)
                                           : SwarmConfig::defaults(bounds, seed);
              const FitnessFn objective = [&fn](std::span<const double> x) { return fn.fn(x); };
              const MinimizeResult r = minimize(objective, config, iterations);
              return std::make_pair(r.best, r.best_fitness);
          },
          py::arg("name"), py::arg("dimension") = 10, py::arg("iterations") = 200,
          py::arg("seed") = 0, py::arg("vanilla") = false);

    // benchfx
    m.def("benchmark_names", &benchmark_names);
    m.def("evaluate_benchmark",
          [](const std::string& name, const std::vector<double>& x) {
              return evaluate_benchmark(make_benchmark(name, static_cast<int>(x.size())), x);
          },
          py::arg("name"), py::arg("x"));

    // allocation
    m.def("solve_allocation",
          [](const Scenario& scenario, std::uint64_t seed, int population, int generations) {
              GaConfig config;
              config.rng_seed = seed;
              config.population = population;
              config.generations = generations;
              const AllocationResult r = solve_allocation(scenario, config);
              py::dict d;
              d["tours"] = r.assignment.tours;
              d["total_distance"] = r.cost.total_distance;
              d["max_time"] = r.cost.max_time;
              d["energy_violation"] = r.cost.energy_violation;
              d["total"] = r.cost.total;
              return d;
          },
          py::arg("scenario"), py::arg("seed") = 0, py::arg("population") = 50,
          py::arg("generations") = 200);
    m.def("brute_force_allocation",
          [](const Scenario& scenario, std::uint64_t max_size) {
              const AllocationResult r = brute_force_allocation(scenario, max_size);
              py::dict d;
              d["tours"] = r.assignment.tours;
              d["total"] = r.cost.total;
              return d;
          },
          py::arg("scenario"), py::arg("max_size") = 200000);

    // planning
    m.def("plan_leg",
          [](const Scenario& scenario, int start_index, int goal_index, int iterations,
             std::uint64_t seed, int n_samples) {
              EncodingConfig encoding;
              encoding.n_samples = n_samples;
              LegPlanner planner(scenario.uav_starts.at(static_cast<std::size_t>(start_index)),
                                 scenario.tasks.at(static_cast<std::size_t>(goal_index)), scenario,
                                 SwarmConfig{}, encoding, 50, seed);
              const ReplanOutcome outcome = planner.replan(iterations);
              py::dict d;
              d["found"] = outcome.decision.has_value();
              d["iterations"] = outcome.iterations;
              d["iterations_to_first_legal"] = outcome.iterations_to_first_legal;
              if (outcome.decision) {
                  const SampledPath path = planner.decode_path(*outcome.decision);
                  d["path"] = path_dict(path);
                  d["cost"] = cost_dict(planner.cost_of(*outcome.decision));
                  d["legal"] = planner.legal(path);
              }
              return d;
          },
          py::arg("scenario"), py::arg("start_index") = 0, py::arg("goal_index") = 0,
          py::arg("iterations") = 200, py::arg("seed") = 0, py::arg("n_samples") = 50);

    // mission
    m.def("run_mission",
          [](const std::string& config_json, std::uint64_t seed) {
              MissionConfig config = load_mission_config(config_json);
              config.seed = seed;
              const MissionLog log = run_mission(config);
              py::dict d;
              d["completed"] = log.completed;
              d["end_time"] = log.end_time;
              d["accepted"] = log.accepted.size();
              d["replans"] = log.replans.size();
              d["tours"] = log.assignment.tours;
              return d;
          },
          py::arg("config_json"), py::arg("seed") = 0);

    m.attr("__version__") = "0.1.0";
}
