#include "swarmplan/mission.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "swarmplan/errors.hpp"
#include "swarmplan/util.hpp"

namespace swarmplan {

using nlohmann::json;

namespace {

// Constant-position path used as the published trajectory of an idle UAV.
SampledPath parked_path(const Vec3& at, int n_samples) {
    SampledPath path;
    for (int s = 0; s < n_samples; ++s) {
        path.params.push_back(static_cast<double>(s) / static_cast<double>(n_samples - 1));
        path.positions.push_back(at);
        path.velocities.push_back({0.0, 0.0, 0.0});
    }
    return path;
}

// Position along a sampled path at a given arc-length progress.
Vec3 position_at_progress(const SampledPath& path, double progress) {
    if (progress <= 0.0) return path.positions.front();
    double walked = 0.0;
    for (std::size_t s = 0; s + 1 < path.positions.size(); ++s) {
        const double seg = distance(path.positions[s], path.positions[s + 1]);
        if (walked + seg >= progress) {
            const double t = seg > 0.0 ? (progress - walked) / seg : 0.0;
            return path.positions[s] + t * (path.positions[s + 1] - path.positions[s]);
        }
        walked += seg;
    }
    return path.positions.back();
}

// Per-UAV runtime bookkeeping.
struct UavRuntime {
    Vec3 position;
    std::vector<int> tour;
    int leg = 0;                 // current leg index (tour position)
    bool done = false;
    std::unique_ptr<LegPlanner> planner;
    std::optional<SampledPath> active;   // accepted trajectory being flown
    double progress = 0.0;               // arc length flown along `active`
    double active_length = 0.0;
    int failed_attempts = 0;             // consecutive stalled replans on this leg
    // Context the planner was last synchronized with.
    int seen_world_version = -1;
    int seen_board_version = -1;
};

} // namespace

void MissionConfig::validate() const {
    scenario.validate();
    ga.validate();
    encoding.validate();
    if (!(t_max > 0.0)) throw ConfigError("mission: t_max must be > 0");
    if (replan_iterations < 1) throw ConfigError("mission: replan_iterations must be >= 1");
    if (!(sim_step > 0.0)) throw ConfigError("mission: sim_step must be > 0");
    if (!(max_sim_time > 0.0)) throw ConfigError("mission: max_sim_time must be > 0");
    if (pool_capacity == 0) throw ConfigError("mission: pool_capacity must be >= 1");
    for (std::size_t i = 0; i + 1 < events.size(); ++i)
        if (events[i].time > events[i + 1].time)
            throw ConfigError("mission: events must be time-ordered");
    for (std::size_t i = 0; i < events.size(); ++i) {
        const MissionEvent& e = events[i];
        const std::string field = "events[" + std::to_string(i) + "]";
        if (e.time < 0.0) throw ConfigError(field + ": time must be >= 0");
        if (e.kind == MissionEventKind::ObstacleAdd && !(e.obstacle.radius > 0.0))
            throw ConfigError(field + ": obstacle radius must be > 0");
        if (e.kind == MissionEventKind::ObstacleRemove && e.index < 0)
            throw ConfigError(field + ": obstacle index must be >= 0");
        if (e.kind == MissionEventKind::TaskMove &&
            (e.index < 0 || e.index >= scenario.task_count()))
            throw ConfigError(field + ": task index out of range");
    }
}

MissionLog run_mission(const MissionConfig& config) {
    config.validate();
    const int n_uavs = config.scenario.uav_count();
    const int n_samples = config.encoding.n_samples;

    MissionLog log;
    log.executed.resize(static_cast<std::size_t>(n_uavs));

    // 1. Task allocation.
    GaConfig ga = config.ga;
    ga.rng_seed = mix_seed(config.seed, 0x61 /* 'a' */);
    const AllocationResult allocation = solve_allocation(config.scenario, ga);
    log.assignment = allocation.assignment;
    log.allocation_cost = allocation.cost;

    // Mutable world; planners see snapshots tagged with a version counter.
    Scenario world = config.scenario;
    int world_version = 0;
    std::size_t next_event = 0;

    // Published trajectory board: latest accepted (or parked) path per UAV.
    std::vector<SampledPath> board(static_cast<std::size_t>(n_uavs));
    int board_version = 0;

    std::vector<UavRuntime> uavs(static_cast<std::size_t>(n_uavs));
    for (int k = 0; k < n_uavs; ++k) {
        UavRuntime& u = uavs[static_cast<std::size_t>(k)];
        u.position = world.uav_starts[static_cast<std::size_t>(k)];
        u.tour = log.assignment.tours[static_cast<std::size_t>(k)];
        u.done = u.tour.empty();
        board[static_cast<std::size_t>(k)] = parked_path(u.position, n_samples);
    }

    int replan_counter = 0;
    const int max_failed_attempts = 10; // "within 10 t_max" unreachable guard

    auto goal_of = [&](const UavRuntime& u) {
        return world.tasks[static_cast<std::size_t>(u.tour[static_cast<std::size_t>(u.leg)])];
    };

    auto peers_of = [&](int k) {
        std::vector<SampledPath> peers;
        peers.reserve(static_cast<std::size_t>(n_uavs - 1));
        for (int l = 0; l < n_uavs; ++l)
            if (l != k) peers.push_back(board[static_cast<std::size_t>(l)]);
        return peers;
    };

    long step_index = 0;
    double now = 0.0;
    while (true) {
        now = static_cast<double>(step_index) * config.sim_step;
        // Apply due events, then re-check every active trajectory against
        // the updated world.
        bool world_changed = false;
        while (next_event < config.events.size() && config.events[next_event].time <= now) {
            const MissionEvent& e = config.events[next_event];
            switch (e.kind) {
            case MissionEventKind::ObstacleAdd:
                world.obstacles.push_back(e.obstacle);
                break;
            case MissionEventKind::ObstacleRemove:
                if (static_cast<std::size_t>(e.index) >= world.obstacles.size())
                    throw ConfigError("mission event: obstacle index " + std::to_string(e.index) +
                                      " out of range");
                world.obstacles.erase(world.obstacles.begin() + e.index);
                break;
            case MissionEventKind::TaskMove:
                world.tasks[static_cast<std::size_t>(e.index)] = e.position;
                for (UavRuntime& u : uavs) {
                    if (u.done || u.leg >= static_cast<int>(u.tour.size())) continue;
                    if (u.tour[static_cast<std::size_t>(u.leg)] == e.index && u.planner)
                        u.planner->set_goal(e.position);
                }
                break;
            }
            log.applied_events.push_back(e);
            ++next_event;
            world_changed = true;
        }
        if (world_changed) {
            ++world_version;
            for (std::size_t k = 0; k < uavs.size(); ++k) {
                UavRuntime& u = uavs[k];
                if (!u.active || u.done) continue;
                const Vec3 leg_start = u.active->positions.front();
                if (!is_legal(*u.active, world, leg_start, goal_of(u))) {
                    u.active.reset();
                    u.failed_attempts = 0;
                    board[k] = parked_path(u.position, n_samples);
                    ++board_version;
                }
            }
        }

        // Planning pass: every UAV without an active trajectory replans.
        for (int k = 0; k < n_uavs; ++k) {
            UavRuntime& u = uavs[static_cast<std::size_t>(k)];
            if (u.done || u.active) continue;
            if (u.leg >= static_cast<int>(u.tour.size())) { u.done = true; continue; }

            const Vec3 goal = goal_of(u);
            if (!u.planner) {
                u.planner = std::make_unique<LegPlanner>(
                    u.position, goal, world, config.swarm_template, config.encoding,
                    config.pool_capacity,
                    mix_seed(config.seed, (static_cast<std::uint64_t>(k) << 20) ^
                                              static_cast<std::uint64_t>(u.leg)));
                u.seen_world_version = world_version;
                u.seen_board_version = -1;
            } else {
                if (u.seen_world_version != world_version) {
                    u.planner->set_scenario(world);
                    u.seen_world_version = world_version;
                }
                if (distance(u.planner->encoding().start(), u.position) > kEndpointTolerance)
                    u.planner->set_start(u.position);
            }
            if (u.seen_board_version != board_version) {
                u.planner->set_peers(peers_of(k));
                u.seen_board_version = board_version;
            }

            u.planner->metrics = [&log, k, &u, replan_counter](const IterationRecord& rec) {
                log.convergence.push_back(ConvergenceRecord{k, u.leg, replan_counter, rec});
            };
            const ReplanOutcome outcome = config.budget_mode == BudgetMode::Iterations
                                              ? u.planner->replan(config.replan_iterations)
                                              : u.planner->replan_for(config.t_max);

            ReplanRecord rec;
            rec.replan_index = replan_counter;
            rec.uav = k;
            rec.leg = u.leg;
            rec.sim_time = now;
            rec.iterations = outcome.iterations;
            rec.iterations_to_first_legal = outcome.iterations_to_first_legal;
            rec.wall_ms = config.budget_mode == BudgetMode::WallClock ? outcome.wall_ms : 0.0;
            rec.accepted = outcome.decision.has_value();
            log.replans.push_back(rec);
            ++replan_counter;

            if (outcome.decision) {
                AcceptedTrajectory acc;
                acc.uav = k;
                acc.leg = u.leg;
                acc.replan_index = rec.replan_index;
                acc.sim_time = now;
                acc.decision = *outcome.decision;
                acc.path = u.planner->decode_path(acc.decision);
                acc.cost = u.planner->cost_of(acc.decision);
                u.active = acc.path;
                u.progress = 0.0;
                u.active_length = arc_length(acc.path);
                u.failed_attempts = 0;
                board[static_cast<std::size_t>(k)] = acc.path;
                ++board_version;
                log.accepted.push_back(std::move(acc));
            } else {
                u.failed_attempts += 1;
                if (u.failed_attempts >= max_failed_attempts)
                    throw MissionError("uav " + std::to_string(k) + " leg " + std::to_string(u.leg) +
                                       ": no legal trajectory found within " +
                                       std::to_string(max_failed_attempts) + " replanning budgets");
            }
        }

        // Record pre-move positions, then advance along accepted trajectories
        // at cruise speed over [now, now + sim_step].
        for (int k = 0; k < n_uavs; ++k)
            log.executed[static_cast<std::size_t>(k)].push_back(
                {now, uavs[static_cast<std::size_t>(k)].position});
        for (int k = 0; k < n_uavs; ++k) {
            UavRuntime& u = uavs[static_cast<std::size_t>(k)];
            if (u.done || !u.active) continue;
            u.progress += world.cruise_speed * config.sim_step;
            if (u.progress >= u.active_length) {
                u.position = u.active->positions.back();
                u.active.reset();
                u.leg += 1;
                u.planner.reset();
                u.failed_attempts = 0;
                if (u.leg >= static_cast<int>(u.tour.size())) u.done = true;
                board[static_cast<std::size_t>(k)] = parked_path(u.position, n_samples);
                ++board_version;
            } else {
                u.position = position_at_progress(*u.active, u.progress);
            }
        }

        ++step_index;
        now = static_cast<double>(step_index) * config.sim_step;
        const bool all_done = std::all_of(uavs.begin(), uavs.end(),
                                          [](const UavRuntime& u) { return u.done; });
        if (all_done) {
            log.completed = true;
            log.end_time = now;
            break;
        }
        if (now > config.max_sim_time) {
            log.completed = false;
            log.end_time = now;
            break;
        }
    }

    // Final positions at the end of the last simulated step.
    for (int k = 0; k < n_uavs; ++k)
        log.executed[static_cast<std::size_t>(k)].push_back(
            {log.end_time, uavs[static_cast<std::size_t>(k)].position});
    return log;
}

namespace {

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (std::none_of(allowed.begin(), allowed.end(),
                         [&](const char* k) { return it.key() == k; }))
            throw ParseError(where + ": unknown key \"" + it.key() + "\"");
    }
}

MissionEvent parse_event(const json& je, const std::string& field) {
    MissionEvent e;
    reject_unknown(je, {"time", "action", "obstacle", "index", "position"}, field);
    if (!je.contains("time") || !je["time"].is_number())
        throw ParseError(field + ".time: required number");
    e.time = je["time"].get<double>();
    const std::string action = je.value("action", "");
    if (action == "obstacle-add") {
        e.kind = MissionEventKind::ObstacleAdd;
        if (!je.contains("obstacle")) throw ParseError(field + ": obstacle-add needs \"obstacle\"");
        const json& jo = je["obstacle"];
        if (!jo.contains("center") || !jo.contains("radius"))
            throw ParseError(field + ".obstacle: needs center and radius");
        e.obstacle.center = {jo["center"][0].get<double>(), jo["center"][1].get<double>(),
                             jo["center"][2].get<double>()};
        e.obstacle.radius = jo["radius"].get<double>();
    } else if (action == "obstacle-remove") {
        e.kind = MissionEventKind::ObstacleRemove;
        if (!je.contains("index")) throw ParseError(field + ": obstacle-remove needs \"index\"");
        e.index = je["index"].get<int>();
    } else if (action == "task-move") {
        e.kind = MissionEventKind::TaskMove;
        if (!je.contains("index") || !je.contains("position"))
            throw ParseError(field + ": task-move needs \"index\" and \"position\"");
        e.index = je["index"].get<int>();
        e.position = {je["position"][0].get<double>(), je["position"][1].get<double>(),
                      je["position"][2].get<double>()};
    } else {
        throw ParseError(field + ".action: expected obstacle-add | obstacle-remove | task-move");
    }
    return e;
}

std::string event_action(const MissionEvent& e) {
    switch (e.kind) {
    case MissionEventKind::ObstacleAdd: return "obstacle-add";
    case MissionEventKind::ObstacleRemove: return "obstacle-remove";
    case MissionEventKind::TaskMove: return "task-move";
    }
    return "?";
}

json event_to_json(const MissionEvent& e) {
    json je{{"time", e.time}, {"action", event_action(e)}};
    switch (e.kind) {
    case MissionEventKind::ObstacleAdd:
        je["obstacle"] = {{"center", {e.obstacle.center.x, e.obstacle.center.y, e.obstacle.center.z}},
                          {"radius", e.obstacle.radius}};
        break;
    case MissionEventKind::ObstacleRemove:
        je["index"] = e.index;
        break;
    case MissionEventKind::TaskMove:
        je["index"] = e.index;
        je["position"] = {e.position.x, e.position.y, e.position.z};
        break;
    }
    return je;
}

} // namespace

MissionConfig load_mission_config(const std::string& json_text, const std::string& base_dir) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("mission config: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("mission config: top level must be an object");
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        static const char* known[] = {"scenario", "scenario_path", "t_max", "replan_iterations",
                                      "sim_step", "max_sim_time", "events", "swarm", "ga",
                                      "encoding", "pool_capacity"};
        if (std::none_of(std::begin(known), std::end(known),
                         [&](const char* k) { return it.key() == k; }))
            throw ParseError("mission config: unknown key \"" + it.key() + "\"");
    }

    MissionConfig config;
    if (doc.contains("scenario") == doc.contains("scenario_path"))
        throw ParseError("mission config: exactly one of \"scenario\" (inline) or "
                         "\"scenario_path\" is required");
    if (doc.contains("scenario")) {
        config.scenario = load_scenario(doc["scenario"].dump());
    } else {
        std::filesystem::path p = doc["scenario_path"].get<std::string>();
        if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
        config.scenario = load_scenario_file(p.string());
    }
    if (doc.contains("t_max")) config.t_max = doc["t_max"].get<double>();
    if (doc.contains("replan_iterations"))
        config.replan_iterations = doc["replan_iterations"].get<int>();
    if (doc.contains("sim_step")) config.sim_step = doc["sim_step"].get<double>();
    if (doc.contains("max_sim_time")) config.max_sim_time = doc["max_sim_time"].get<double>();
    if (doc.contains("pool_capacity"))
        config.pool_capacity = doc["pool_capacity"].get<std::size_t>();
    if (doc.contains("events")) {
        if (!doc["events"].is_array()) throw ParseError("events: expected an array");
        for (std::size_t i = 0; i < doc["events"].size(); ++i)
            config.events.push_back(
                parse_event(doc["events"][i], "events[" + std::to_string(i) + "]"));
    }
    if (doc.contains("swarm")) {
        const json& js = doc["swarm"];
        reject_unknown(js, {"particles", "reset_rate", "entropy_bins"}, "swarm");
        if (js.contains("particles")) config.swarm_template.n_particles = js["particles"].get<int>();
        if (js.contains("reset_rate")) config.swarm_template.reset_rate = js["reset_rate"].get<double>();
        if (js.contains("entropy_bins")) config.swarm_template.entropy_bins = js["entropy_bins"].get<int>();
    }
    if (doc.contains("ga")) {
        const json& jg = doc["ga"];
        reject_unknown(jg, {"population", "generations", "crossover_rate", "mutation_rate", "elitism"},
                       "ga");
        if (jg.contains("population")) config.ga.population = jg["population"].get<int>();
        if (jg.contains("generations")) config.ga.generations = jg["generations"].get<int>();
        if (jg.contains("crossover_rate")) config.ga.crossover_rate = jg["crossover_rate"].get<double>();
        if (jg.contains("mutation_rate")) config.ga.mutation_rate = jg["mutation_rate"].get<double>();
        if (jg.contains("elitism")) config.ga.elitism = jg["elitism"].get<int>();
    }
    if (doc.contains("encoding")) {
        const json& je = doc["encoding"];
        reject_unknown(je, {"free_control_points", "order", "n_samples"}, "encoding");
        if (je.contains("free_control_points"))
            config.encoding.free_control_points = je["free_control_points"].get<int>();
        if (je.contains("order")) config.encoding.order = je["order"].get<int>();
        if (je.contains("n_samples")) config.encoding.n_samples = je["n_samples"].get<int>();
    }
    config.validate();
    return config;
}

MissionConfig load_mission_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open mission config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_mission_config(buf.str(),
                               std::filesystem::path(path).parent_path().string());
}

std::string mission_config_schema_help() {
    return R"(Mission config schema (JSON):
{
  "scenario":          { ... inline scenario object ... }  (or "scenario_path")
  "t_max":             0.5,      wall-clock replanning budget, seconds
  "replan_iterations": 60,       iteration-budget substitute for t_max
  "sim_step":          0.1,      simulated clock step, seconds
  "max_sim_time":      600.0,
  "pool_capacity":     50,
  "events": [
    {"time": 5.0, "action": "obstacle-add",    "obstacle": {"center": [x,y,z], "radius": r}},
    {"time": 8.0, "action": "obstacle-remove", "index": 0},
    {"time": 9.0, "action": "task-move",       "index": 2, "position": [x,y,z]}
  ],
  "swarm":    {"particles": 100, "reset_rate": 0.5, "entropy_bins": 10},
  "ga":       {"population": 50, "generations": 200, "crossover_rate": 0.9,
               "mutation_rate": 0.2, "elitism": 2},
  "encoding": {"free_control_points": 6, "order": 4, "n_samples": 50}
})";
}

void write_mission_log(const MissionLog& log, const MissionConfig& config,
                       const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);

    json doc;
    doc["scenario"] = json::parse(save_scenario(config.scenario));
    doc["budget_mode"] = config.budget_mode == BudgetMode::Iterations ? "iterations" : "wallclock";
    doc["t_max"] = config.t_max;
    doc["replan_iterations"] = config.replan_iterations;
    doc["sim_step"] = config.sim_step;
    doc["max_sim_time"] = config.max_sim_time;
    doc["seed"] = config.seed;
    doc["events"] = json::array();
    for (const MissionEvent& e : config.events) doc["events"].push_back(event_to_json(e));
    doc["applied_events"] = json::array();
    for (const MissionEvent& e : log.applied_events) doc["applied_events"].push_back(event_to_json(e));
    doc["assignment"] = json::array();
    for (const auto& tour : log.assignment.tours) doc["assignment"].push_back(tour);
    doc["allocation_cost"] = {{"total_distance", log.allocation_cost.total_distance},
                              {"max_time", log.allocation_cost.max_time},
                              {"energy_violation", log.allocation_cost.energy_violation},
                              {"total", log.allocation_cost.total}};
    doc["completed"] = log.completed;
    doc["end_time"] = log.end_time;
    doc["accepted"] = json::array();
    for (const AcceptedTrajectory& acc : log.accepted)
        doc["accepted"].push_back({{"uav", acc.uav},
                                   {"leg", acc.leg},
                                   {"replan_index", acc.replan_index},
                                   {"sim_time", acc.sim_time},
                                   {"cost_total", acc.cost.total}});
    std::ofstream(fs::path(dir) / "mission.json") << doc.dump(2) << "\n";

    std::vector<int> per_uav_counter(log.executed.size(), 0);
    for (const AcceptedTrajectory& acc : log.accepted) {
        const int i = per_uav_counter[static_cast<std::size_t>(acc.uav)]++;
        std::ofstream csv(fs::path(dir) / ("uav_" + std::to_string(acc.uav) + "_trajectory_" +
                                           std::to_string(i) + ".csv"));
        csv << "u,x,y,z\n";
        for (std::size_t s = 0; s < acc.path.size(); ++s)
            csv << format_double(acc.path.params[s]) << "," << format_double(acc.path.positions[s].x)
                << "," << format_double(acc.path.positions[s].y) << ","
                << format_double(acc.path.positions[s].z) << "\n";
    }

    {
        std::ofstream csv(fs::path(dir) / "latency.csv");
        csv << "replan_index,iterations,wall_ms\n";
        for (const ReplanRecord& r : log.replans)
            csv << r.replan_index << "," << r.iterations << "," << format_double(r.wall_ms) << "\n";
    }
    {
        std::ofstream csv(fs::path(dir) / "convergence.csv");
        csv << "uav,leg,replan_index,iteration,gbest_fitness,entropy,w,c1,c2,pool_size\n";
        for (const ConvergenceRecord& c : log.convergence)
            csv << c.uav << "," << c.leg << "," << c.replan_index << "," << c.iteration.iteration
                << "," << format_double(c.iteration.gbest_fitness) << ","
                << format_double(c.iteration.entropy) << "," << format_double(c.iteration.w) << ","
                << format_double(c.iteration.c1) << "," << format_double(c.iteration.c2) << ","
                << c.iteration.pool_size << "\n";
    }
    {
        std::ofstream csv(fs::path(dir) / "executed.csv");
        csv << "uav,time,x,y,z\n";
        for (std::size_t k = 0; k < log.executed.size(); ++k)
            for (const ExecutedSample& s : log.executed[k])
                csv << k << "," << format_double(s.time) << "," << format_double(s.position.x) << ","
                    << format_double(s.position.y) << "," << format_double(s.position.z) << "\n";
    }
}

} // namespace swarmplan
