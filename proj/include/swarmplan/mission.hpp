#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swarmplan/allocation.hpp"
#include "swarmplan/environment.hpp"
#include "swarmplan/leg_planner.hpp"
#include "swarmplan/pe_pso.hpp"

namespace swarmplan {

enum class MissionEventKind { ObstacleAdd, ObstacleRemove, TaskMove };

// Scripted world change applied at a simulated time.
struct MissionEvent {
    double time = 0.0;
    MissionEventKind kind = MissionEventKind::ObstacleAdd;
    Obstacle obstacle; // ObstacleAdd
    int index = -1;    // ObstacleRemove: obstacle index; TaskMove: task index
    Vec3 position;     // TaskMove target
};

// Replanning budget: wall-clock seconds reproduce online latency behavior;
// an iteration count substitutes for it wherever determinism matters.
enum class BudgetMode { Iterations, WallClock };

struct MissionConfig {
    Scenario scenario;
    GaConfig ga;
    SwarmConfig swarm_template; // bounds/v_max/seed filled per leg
    EncodingConfig encoding;
    BudgetMode budget_mode = BudgetMode::Iterations;
    double t_max = 0.5;          // wall-clock replanning budget, seconds
    int replan_iterations = 60;  // iteration-budget substitute for t_max
    std::vector<MissionEvent> events; // must be time-ordered
    double sim_step = 0.1;       // seconds
    double max_sim_time = 600.0; // seconds
    std::size_t pool_capacity = 50;
    std::uint64_t seed = 0;

    void validate() const; // throws ConfigError / ValidationError
};

struct AcceptedTrajectory {
    int uav = 0;
    int leg = 0;          // index into the UAV's tour legs
    int replan_index = 0; // global replan counter at acceptance
    double sim_time = 0.0;
    std::vector<double> decision;
    SampledPath path;
    CostBreakdown cost;
};

struct ReplanRecord {
    int replan_index = 0;
    int uav = 0;
    int leg = 0;
    double sim_time = 0.0;
    int iterations = 0;
    int iterations_to_first_legal = -1;
    double wall_ms = 0.0; // reported as 0 in iteration-budget mode
    bool accepted = false; // false = stall (pool stayed empty)
};

struct ConvergenceRecord {
    int uav = 0;
    int leg = 0;
    int replan_index = 0;
    IterationRecord iteration;
};

struct ExecutedSample {
    double time = 0.0;
    Vec3 position;
};

struct MissionLog {
    Assignment assignment;
    AllocationCost allocation_cost;
    std::vector<AcceptedTrajectory> accepted;
    std::vector<ReplanRecord> replans;
    std::vector<ConvergenceRecord> convergence;
    std::vector<std::vector<ExecutedSample>> executed; // per UAV
    std::vector<MissionEvent> applied_events;
    double end_time = 0.0;
    bool completed = false; // all tours finished before max_sim_time
};

// Run the full pipeline: GA task allocation, one persistent planner per
// active UAV leg sharing published peer trajectories, a simulated clock with
// scripted events, legality re-checks and replanning after each event.
// Deterministic in iteration-budget mode for a fixed seed.
MissionLog run_mission(const MissionConfig& config);

// Mission configuration document (JSON): scenario inline or by path, budgets,
// events, optional swarm/ga overrides.
MissionConfig load_mission_config(const std::string& json_text,
                                  const std::string& base_dir = ".");
MissionConfig load_mission_config_file(const std::string& path);
std::string mission_config_schema_help();

// Serialize a run into `dir`: mission.json (config echo, event timeline,
// acceptance summary), uav_<k>_trajectory_<i>.csv, latency.csv,
// convergence.csv.
void write_mission_log(const MissionLog& log, const MissionConfig& config,
                       const std::string& dir);

} // namespace swarmplan
