#include "swarmplan/leg_planner.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "swarmplan/errors.hpp"

namespace swarmplan {

void EncodingConfig::validate() const {
    if (free_control_points < 1)
        throw ConfigError("encoding: need at least one free control point");
    if (order < 2) throw ConfigError("encoding: order must be >= 2");
    if (free_control_points + 2 < order)
        throw ConfigError("encoding: control count (free + 2) must be >= order");
    if (n_samples < 2) throw ConfigError("encoding: n_samples must be >= 2");
}

TrajectoryEncoding::TrajectoryEncoding(Vec3 start, Vec3 goal, EncodingConfig config)
    : start_(start), goal_(goal), config_(config) {
    config_.validate();
}

BSplineTrajectory TrajectoryEncoding::decode(std::span<const double> decision) const {
    if (decision.size() != dimension())
        throw InputError("decode: decision vector has wrong dimension");
    std::vector<Vec3> control;
    control.reserve(static_cast<std::size_t>(config_.free_control_points) + 2);
    control.push_back(start_);
    for (int i = 0; i < config_.free_control_points; ++i) {
        const std::size_t at = static_cast<std::size_t>(i) * 3;
        control.push_back({decision[at], decision[at + 1], decision[at + 2]});
    }
    control.push_back(goal_);
    return BSplineTrajectory::clamped(config_.order, std::move(control));
}

SampledPath TrajectoryEncoding::decode_path(std::span<const double> decision) const {
    return decode(decision).sample(config_.n_samples, true);
}

std::vector<double> TrajectoryEncoding::straight_line_decision() const {
    std::vector<double> decision;
    decision.reserve(dimension());
    const int m = config_.free_control_points;
    for (int i = 1; i <= m; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(m + 1);
        const Vec3 p = start_ + t * (goal_ - start_);
        decision.push_back(p.x);
        decision.push_back(p.y);
        decision.push_back(p.z);
    }
    return decision;
}

BoundsNd TrajectoryEncoding::decision_bounds(const WorldBounds& bounds) const {
    BoundsNd box;
    box.lower.reserve(dimension());
    box.upper.reserve(dimension());
    for (int i = 0; i < config_.free_control_points; ++i) {
        box.lower.insert(box.lower.end(),
                         {bounds.min_corner.x, bounds.min_corner.y, bounds.min_corner.z});
        box.upper.insert(box.upper.end(),
                         {bounds.max_corner.x, bounds.max_corner.y, bounds.max_corner.z});
    }
    return box;
}

LegPlanner::LegPlanner(Vec3 start, Vec3 goal, const Scenario& scenario,
                       SwarmConfig swarm_template, EncodingConfig encoding,
                       std::size_t pool_capacity, std::uint64_t seed)
    : encoding_(start, goal, encoding), scenario_(scenario), config_(std::move(swarm_template)),
      pool_(pool_capacity) {
    config_.bounds = encoding_.decision_bounds(scenario_.bounds);
    config_.v_max.clear();
    config_.rng_seed = seed;
    rebuild_swarm();
}

void LegPlanner::rebuild_swarm() { state_ = init_swarm(config_); }

void LegPlanner::set_scenario(const Scenario& scenario) {
    scenario_ = scenario;
    pool_.clear();
}

void LegPlanner::set_peers(std::vector<SampledPath> peers) {
    peers_ = std::move(peers);
    pool_.clear();
}

void LegPlanner::set_start(const Vec3& start) {
    encoding_ = TrajectoryEncoding(start, encoding_.goal(), encoding_.config());
    pool_.clear();
}

void LegPlanner::set_goal(const Vec3& goal) {
    encoding_ = TrajectoryEncoding(encoding_.start(), goal, encoding_.config());
    pool_.clear();
}

SampledPath LegPlanner::decode_path(std::span<const double> decision) const {
    return encoding_.decode_path(decision);
}

CostBreakdown LegPlanner::cost_of(std::span<const double> decision) const {
    return trajectory_cost(encoding_.decode_path(decision), scenario_, peers_);
}

bool LegPlanner::legal(const SampledPath& path) const {
    return is_legal(path, scenario_, encoding_.start(), encoding_.goal());
}

Evaluation LegPlanner::evaluate(std::span<const double> decision) const {
    try {
        const SampledPath path = encoding_.decode_path(decision);
        const CostBreakdown cost = trajectory_cost(path, scenario_, peers_);
        return {cost.total, legal(path)};
    } catch (const Error&) {
        return {std::numeric_limits<double>::infinity(), false};
    }
}

ReplanOutcome LegPlanner::run(int max_iterations, double budget_seconds) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    ReplanOutcome outcome;

    if (distance(encoding_.start(), encoding_.goal()) <= kEndpointTolerance) {
        // Degenerate leg: hold position with a zero-length trajectory.
        std::vector<double> decision = encoding_.straight_line_decision();
        pool_.insert(decision, 0.0, true);
        outcome.decision = std::move(decision);
        outcome.iterations_to_first_legal = 0;
        return outcome;
    }

    const EvalFn eval = [this](std::span<const double> x) { return evaluate(x); };
    while (true) {
        if (budget_seconds >= 0.0) {
            const double elapsed = std::chrono::duration<double>(clock::now() - t0).count();
            if (elapsed >= budget_seconds) break;
        } else if (outcome.iterations >= max_iterations) {
            break;
        }
        step(state_, eval, config_, &pool_, metrics);
        ++outcome.iterations;
        if (outcome.iterations_to_first_legal < 0 && !pool_.empty())
            outcome.iterations_to_first_legal = outcome.iterations;
    }
    if (const PoolEntry* best = pool_.best()) outcome.decision = best->decision;
    outcome.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    return outcome;
}

ReplanOutcome LegPlanner::replan(int iteration_budget) {
    if (iteration_budget < 0) throw ConfigError("replan: iteration budget must be >= 0");
    return run(iteration_budget, -1.0);
}

ReplanOutcome LegPlanner::replan_for(double budget_seconds) {
    if (budget_seconds < 0.0) throw ConfigError("replan: wall-clock budget must be >= 0");
    return run(0, budget_seconds);
}

} // namespace swarmplan
