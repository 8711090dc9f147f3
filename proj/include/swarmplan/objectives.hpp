#pragma once

#include <span>

#include "swarmplan/assignment.hpp"
#include "swarmplan/environment.hpp"
#include "swarmplan/geometry.hpp"

namespace swarmplan {

// Collision-term clamp: inverse inter-agent separation is capped at
// 1/kMinSeparation so contact keeps a finite, rankable cost.
inline constexpr double kMinSeparation = 0.1; // meters

// Endpoint tolerance of the legality predicate.
inline constexpr double kEndpointTolerance = 1e-6; // meters

// The five weighted trajectory-cost terms and their weighted sum.
struct CostBreakdown {
    double distance = 0.0;  // D: chord arc length, meters
    double safety = 0.0;    // S: sum of squared clearance shortfalls
    double collision = 0.0; // C: worst clamped inverse separation from peers
    double energy = 0.0;    // E: alpha*D + beta * integral of squared speed
    double time = 0.0;      // T: D / cruise_speed, seconds
    double total = 0.0;     // w1*D + w2*S + w3*C + w4*E + w5*T
};

// The three allocation cost terms and their weighted sum.
struct AllocationCost {
    double total_distance = 0.0;   // sum of all tour legs, meters
    double max_time = 0.0;         // slowest UAV tour time, seconds
    double energy_violation = 0.0; // sum of squared budget overruns
    double total = 0.0;            // w1*D + w2*T + w3*E
};

// Evaluate the five-term trajectory cost of `path` in `scenario`, with the
// collision term taken against `peers` at equal sample indices. The path must
// carry velocities; peers must share the sample count.
CostBreakdown trajectory_cost(const SampledPath& path, const Scenario& scenario,
                              std::span<const SampledPath> peers = {});

// Legality predicate: every sample inside bounds, clearance >= r_safe, and
// the path endpoints within kEndpointTolerance of the commanded start/goal.
bool is_legal(const SampledPath& path, const Scenario& scenario, const Vec3& start,
              const Vec3& goal);

// Tour cost of an assignment: per-UAV open tours from each start through its
// ordered tasks, with time = distance / cruise_speed and a hinge-squared
// penalty for per-UAV energy budget overruns.
AllocationCost allocation_cost(const Assignment& assignment, const Scenario& scenario);

} // namespace swarmplan
