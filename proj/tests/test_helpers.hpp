#pragma once

#include <random>
#include <vector>

#include "swarmplan/environment.hpp"
#include "swarmplan/geometry.hpp"
#include "swarmplan/vec3.hpp"

namespace swarmplan::testing {

// Empty 100-cube world with one UAV and one task on the x axis.
inline Scenario free_space_scenario() {
    Scenario s;
    s.bounds = {{0.0, 0.0, 0.0}, {100.0, 100.0, 100.0}};
    s.uav_starts = {{10.0, 50.0, 50.0}};
    s.energy_budgets = {1e9};
    s.tasks = {{90.0, 50.0, 50.0}};
    s.r_safe = 1.0;
    s.cruise_speed = 5.0;
    s.trajectory_weights = {1.0, 50.0, 5.0, 0.01, 1.0};
    return s;
}

// The 3-UAV / 5-task / 5-obstacle layout used by the mission-level tests.
inline Scenario three_uav_scenario() {
    Scenario s;
    s.bounds = {{0.0, 0.0, 0.0}, {100.0, 100.0, 30.0}};
    s.obstacles = {{{35.0, 25.0, 8.0}, 6.0},
                   {{55.0, 40.0, 10.0}, 7.0},
                   {{45.0, 60.0, 10.0}, 6.0},
                   {{65.0, 70.0, 8.0}, 6.0},
                   {{50.0, 15.0, 8.0}, 5.0}};
    s.uav_starts = {{5.0, 20.0, 5.0}, {5.0, 50.0, 5.0}, {5.0, 80.0, 5.0}};
    s.energy_budgets = {500.0, 500.0, 500.0};
    s.tasks = {{90.0, 15.0, 8.0},
               {85.0, 35.0, 10.0},
               {95.0, 50.0, 12.0},
               {85.0, 65.0, 10.0},
               {90.0, 85.0, 8.0}};
    s.r_safe = 1.5;
    s.cruise_speed = 5.0;
    s.trajectory_weights = {1.0, 50.0, 5.0, 0.01, 1.0};
    s.energy_alpha = 1.0;
    s.energy_beta = 0.01;
    return s;
}

// Hand-built straight path with velocities, for objective-level tests.
inline SampledPath straight_path(const Vec3& a, const Vec3& b, int n_samples) {
    SampledPath path;
    for (int i = 0; i < n_samples; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n_samples - 1);
        path.params.push_back(t);
        path.positions.push_back(a + t * (b - a));
        path.velocities.push_back(b - a);
    }
    return path;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

} // namespace swarmplan::testing
