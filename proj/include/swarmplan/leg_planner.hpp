#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "swarmplan/environment.hpp"
#include "swarmplan/geometry.hpp"
#include "swarmplan/objectives.hpp"
#include "swarmplan/pe_pso.hpp"

namespace swarmplan {

// Shape of the decision space for one trajectory leg.
struct EncodingConfig {
    int free_control_points = 6; // interior control points, 3 coords each
    int order = 4;               // cubic by default
    int n_samples = 50;          // cost-evaluation sampling resolution

    void validate() const; // throws ConfigError
};

// Maps a flat decision vector (the free interior control points) to a
// clamped B-spline pinned to the leg start/goal. Endpoints are excluded
// from the decision space so the curve always interpolates them.
class TrajectoryEncoding {
public:
    TrajectoryEncoding(Vec3 start, Vec3 goal, EncodingConfig config);

    std::size_t dimension() const { return static_cast<std::size_t>(config_.free_control_points) * 3; }
    const Vec3& start() const { return start_; }
    const Vec3& goal() const { return goal_; }
    const EncodingConfig& config() const { return config_; }

    BSplineTrajectory decode(std::span<const double> decision) const;
    SampledPath decode_path(std::span<const double> decision) const;

    // Decision vector whose free control points sit evenly on the segment
    // start-goal (decodes to a straight line).
    std::vector<double> straight_line_decision() const;

    // Per-coordinate world-bounds box repeated for every free control point.
    BoundsNd decision_bounds(const WorldBounds& bounds) const;

private:
    Vec3 start_;
    Vec3 goal_;
    EncodingConfig config_;
};

struct ReplanOutcome {
    std::optional<std::vector<double>> decision; // pool best; empty pool -> nullopt
    int iterations = 0;
    int iterations_to_first_legal = -1; // -1 when the pool stayed empty
    double wall_ms = 0.0;
};

// Single-leg trajectory planner: a PE-PSO swarm over the leg's decision
// space whose fitness is the five-term trajectory cost against the current
// peers, feeding a pool of legal candidates. The swarm persists across
// replans of the same leg; changing the context (world version, peers,
// start point) clears the pool, never the swarm.
class LegPlanner {
public:
    LegPlanner(Vec3 start, Vec3 goal, const Scenario& scenario, SwarmConfig swarm_template,
               EncodingConfig encoding, std::size_t pool_capacity, std::uint64_t seed);

    // Context changes keep the swarm (warm start) but clear the pool, whose
    // entries were ranked against the old context.
    void set_scenario(const Scenario& scenario);
    void set_peers(std::vector<SampledPath> peers);
    void set_start(const Vec3& start);
    void set_goal(const Vec3& goal);

    // Run up to `iteration_budget` optimizer steps, then return the best
    // pool entry. A degenerate leg (start == goal within tolerance)
    // short-circuits to a zero-length trajectory without stepping.
    ReplanOutcome replan(int iteration_budget);

    // Wall-clock budget variant: steps until `budget_seconds` elapse.
    ReplanOutcome replan_for(double budget_seconds);

    const TrajectoryPool& pool() const { return pool_; }
    const SwarmState& state() const { return state_; }
    const TrajectoryEncoding& encoding() const { return encoding_; }
    const Scenario& scenario() const { return scenario_; }

    SampledPath decode_path(std::span<const double> decision) const;
    CostBreakdown cost_of(std::span<const double> decision) const;
    bool legal(const SampledPath& path) const;

    MetricsSink metrics; // optional per-iteration observer

private:
    Evaluation evaluate(std::span<const double> decision) const;
    void rebuild_swarm();
    ReplanOutcome run(int max_iterations, double budget_seconds);

    TrajectoryEncoding encoding_;
    Scenario scenario_;
    std::vector<SampledPath> peers_;
    SwarmConfig config_;
    SwarmState state_;
    TrajectoryPool pool_;
};

} // namespace swarmplan
