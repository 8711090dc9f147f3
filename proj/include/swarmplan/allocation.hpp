#pragma once

#include <cstdint>
#include <functional>

#include "swarmplan/assignment.hpp"
#include "swarmplan/environment.hpp"
#include "swarmplan/objectives.hpp"

namespace swarmplan {

struct GaConfig {
    int population = 50;
    int generations = 200;
    double crossover_rate = 0.9;
    double mutation_rate = 0.2;
    int elitism = 2;
    std::uint64_t rng_seed = 0;

    void validate() const; // throws ConfigError
};

struct AllocationResult {
    Assignment assignment;
    AllocationCost cost;
};

// Optional per-generation observer: (generation index, best cost so far).
using GaProgressFn = std::function<void(int, double)>;

// Genetic-algorithm task allocation over chromosomes encoded as a task
// permutation plus K-1 split points: order crossover on the permutation,
// swap mutation, split-shift mutation, tournament selection of size 3,
// elitism. Deterministic under rng_seed.
AllocationResult solve_allocation(const Scenario& scenario, const GaConfig& config,
                                  const GaProgressFn& progress = {});

// Exhaustive optimum over every task-to-UAV assignment and per-UAV order.
// Refuses instances beyond the guard (N > 7, K > 3, or more than max_size
// candidate tours) with OracleRefusedError rather than approximating.
AllocationResult brute_force_allocation(const Scenario& scenario,
                                        std::uint64_t max_size = 200000);

} // namespace swarmplan
