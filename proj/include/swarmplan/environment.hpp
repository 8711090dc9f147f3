#pragma once

#include <array>
#include <string>
#include <vector>

#include "swarmplan/vec3.hpp"

namespace swarmplan {

// Spherical obstacle. A point-obstacle world is the radius->0 limit.
struct Obstacle {
    Vec3 center;
    double radius = 0.0;
};

struct WorldBounds {
    Vec3 min_corner;
    Vec3 max_corner;
};

// Full world description: bounds, obstacles, UAV fleet, task points, safety
// margin, kinematics, and the cost weights shared by planning and allocation.
// Immutable after load; safe for shared concurrent reads.
struct Scenario {
    WorldBounds bounds;
    std::vector<Obstacle> obstacles;
    std::vector<Vec3> uav_starts;
    std::vector<double> energy_budgets; // one per UAV; +inf = unconstrained
    std::vector<Vec3> tasks;
    double r_safe = 1.0;
    double cruise_speed = 5.0;
    std::array<double, 5> trajectory_weights{1.0, 10.0, 1.0, 0.01, 1.0}; // D, S, C, E, T
    std::array<double, 3> allocation_weights{1.0, 1.0, 1.0};             // D, T, E
    double energy_alpha = 1.0; // distance coefficient of the energy term
    double energy_beta = 0.1;  // squared-speed coefficient of the energy term

    int uav_count() const { return static_cast<int>(uav_starts.size()); }
    int task_count() const { return static_cast<int>(tasks.size()); }

    // Throws ValidationError naming the offending field.
    void validate() const;
};

// Componentwise containment, boundary inclusive.
bool inside_bounds(const Vec3& point, const WorldBounds& bounds);

// Signed distance to the nearest obstacle surface: min over obstacles of
// ||point - center|| - radius. Positive in free space; +inf with no obstacles.
double clearance(const Vec3& point, const Scenario& scenario);

// Parse and validate a scenario document (JSON). Unknown keys are rejected.
// Missing optional fields take the defaults documented in the schema.
Scenario load_scenario(const std::string& json_text);
Scenario load_scenario_file(const std::string& path);

// Canonical serialization; load(save(s)) reproduces every finite field
// bit-for-bit.
std::string save_scenario(const Scenario& scenario);

// Human-readable schema description (used by the CLI --help).
std::string scenario_schema_help();

} // namespace swarmplan
