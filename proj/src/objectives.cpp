#include "swarmplan/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "swarmplan/errors.hpp"

namespace swarmplan {

CostBreakdown trajectory_cost(const SampledPath& path, const Scenario& scenario,
                              std::span<const SampledPath> peers) {
    if (path.size() < 2) throw InputError("trajectory_cost: path needs at least 2 samples");
    if (!path.has_velocities())
        throw InputError("trajectory_cost: path must be sampled with velocities");
    for (const SampledPath& peer : peers)
        if (peer.size() != path.size())
            throw ConfigError("trajectory_cost: peer sample count " + std::to_string(peer.size()) +
                              " does not match path sample count " + std::to_string(path.size()));

    CostBreakdown cost;
    cost.distance = arc_length(path);

    for (const Vec3& p : path.positions) {
        const double shortfall = std::max(0.0, scenario.r_safe - clearance(p, scenario));
        cost.safety += shortfall * shortfall;
    }

    for (const SampledPath& peer : peers) {
        for (std::size_t s = 0; s < path.size(); ++s) {
            const double sep = std::max(kMinSeparation, distance(path.positions[s], peer.positions[s]));
            cost.collision = std::max(cost.collision, 1.0 / sep);
        }
    }

    // Trapezoidal integral of squared parametric speed over the parameter range.
    double speed_sq_integral = 0.0;
    for (std::size_t s = 0; s + 1 < path.size(); ++s) {
        const double du = path.params[s + 1] - path.params[s];
        speed_sq_integral +=
            0.5 * du * (path.velocities[s].norm_sq() + path.velocities[s + 1].norm_sq());
    }
    cost.energy = scenario.energy_alpha * cost.distance + scenario.energy_beta * speed_sq_integral;

    cost.time = cost.distance / scenario.cruise_speed;

    const auto& w = scenario.trajectory_weights;
    cost.total = w[0] * cost.distance + w[1] * cost.safety + w[2] * cost.collision +
                 w[3] * cost.energy + w[4] * cost.time;
    return cost;
}

bool is_legal(const SampledPath& path, const Scenario& scenario, const Vec3& start,
              const Vec3& goal) {
    if (path.size() < 2) return false;
    if (distance(path.positions.front(), start) > kEndpointTolerance) return false;
    if (distance(path.positions.back(), goal) > kEndpointTolerance) return false;
    for (const Vec3& p : path.positions) {
        if (!inside_bounds(p, scenario.bounds)) return false;
        if (clearance(p, scenario) < scenario.r_safe) return false;
    }
    return true;
}

void validate_assignment(const Assignment& assignment, int n_tasks) {
    std::vector<int> seen(static_cast<std::size_t>(n_tasks), 0);
    for (const auto& tour : assignment.tours) {
        for (int t : tour) {
            if (t < 0 || t >= n_tasks)
                throw AssignmentError("assignment: task index " + std::to_string(t) + " out of range");
            ++seen[static_cast<std::size_t>(t)];
        }
    }
    for (int t = 0; t < n_tasks; ++t) {
        if (seen[static_cast<std::size_t>(t)] != 1)
            throw AssignmentError("assignment: task " + std::to_string(t) + " covered " +
                                  std::to_string(seen[static_cast<std::size_t>(t)]) +
                                  " times (must be exactly once)");
    }
}

AllocationCost allocation_cost(const Assignment& assignment, const Scenario& scenario) {
    if (assignment.tours.size() != static_cast<std::size_t>(scenario.uav_count()))
        throw AssignmentError("assignment: tour count must equal UAV count");
    validate_assignment(assignment, scenario.task_count());

    AllocationCost cost;
    for (std::size_t k = 0; k < assignment.tours.size(); ++k) {
        double tour_dist = 0.0;
        Vec3 at = scenario.uav_starts[k];
        for (int t : assignment.tours[k]) {
            tour_dist += distance(at, scenario.tasks[static_cast<std::size_t>(t)]);
            at = scenario.tasks[static_cast<std::size_t>(t)];
        }
        cost.total_distance += tour_dist;
        cost.max_time = std::max(cost.max_time, tour_dist / scenario.cruise_speed);
        const double tour_energy = scenario.energy_alpha * tour_dist;
        const double overrun = std::max(0.0, tour_energy - scenario.energy_budgets[k]);
        cost.energy_violation += overrun * overrun;
    }
    const auto& w = scenario.allocation_weights;
    cost.total = w[0] * cost.total_distance + w[1] * cost.max_time + w[2] * cost.energy_violation;
    return cost;
}

} // namespace swarmplan
