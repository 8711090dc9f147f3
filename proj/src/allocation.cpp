#include "swarmplan/allocation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "swarmplan/errors.hpp"

namespace swarmplan {

namespace {

// Chromosome: a permutation of all task indices plus sorted split points in
// [0, N] that cut it into K consecutive (possibly empty) tours.
struct Chromosome {
    std::vector<int> perm;
    std::vector<int> splits;
    double cost = std::numeric_limits<double>::infinity();
};

Assignment decode(const Chromosome& c, int n_uavs) {
    Assignment a;
    a.tours.resize(static_cast<std::size_t>(n_uavs));
    int begin = 0;
    for (int k = 0; k < n_uavs; ++k) {
        const int end = (k + 1 < n_uavs) ? c.splits[static_cast<std::size_t>(k)]
                                         : static_cast<int>(c.perm.size());
        a.tours[static_cast<std::size_t>(k)].assign(c.perm.begin() + begin, c.perm.begin() + end);
        begin = end;
    }
    return a;
}

void repair_splits(std::vector<int>& splits, int n_tasks) {
    for (int& s : splits) s = std::clamp(s, 0, n_tasks);
    std::sort(splits.begin(), splits.end());
}

int rand_int(std::mt19937_64& rng, int lo, int hi) { // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Chromosome random_chromosome(std::mt19937_64& rng, int n_tasks, int n_uavs) {
    Chromosome c;
    c.perm.resize(static_cast<std::size_t>(n_tasks));
    std::iota(c.perm.begin(), c.perm.end(), 0);
    std::shuffle(c.perm.begin(), c.perm.end(), rng);
    c.splits.resize(static_cast<std::size_t>(n_uavs - 1));
    for (int& s : c.splits) s = rand_int(rng, 0, n_tasks);
    repair_splits(c.splits, n_tasks);
    return c;
}

// Order crossover: copy a slice of parent a, fill the rest in parent-b order.
std::vector<int> order_crossover(const std::vector<int>& a, const std::vector<int>& b,
                                 std::mt19937_64& rng) {
    const int n = static_cast<int>(a.size());
    if (n < 2) return a;
    int lo = rand_int(rng, 0, n - 1);
    int hi = rand_int(rng, 0, n - 1);
    if (lo > hi) std::swap(lo, hi);
    std::vector<int> child(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (int i = lo; i <= hi; ++i) {
        child[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)];
        used[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])] = 1;
    }
    int write = (hi + 1) % n;
    for (int i = 0; i < n; ++i) {
        const int gene = b[static_cast<std::size_t>((hi + 1 + i) % n)];
        if (used[static_cast<std::size_t>(gene)]) continue;
        child[static_cast<std::size_t>(write)] = gene;
        write = (write + 1) % n;
    }
    return child;
}

double evaluate(Chromosome& c, const Scenario& scenario) {
    c.cost = allocation_cost(decode(c, scenario.uav_count()), scenario).total;
    return c.cost;
}

const Chromosome& tournament(const std::vector<Chromosome>& pop, std::mt19937_64& rng) {
    const int n = static_cast<int>(pop.size());
    const Chromosome* best = nullptr;
    for (int round = 0; round < 3; ++round) {
        const Chromosome& pick = pop[static_cast<std::size_t>(rand_int(rng, 0, n - 1))];
        if (!best || pick.cost < best->cost) best = &pick;
    }
    return *best;
}

} // namespace

void GaConfig::validate() const {
    if (population < 2) throw ConfigError("ga: population must be >= 2");
    if (generations < 0) throw ConfigError("ga: generations must be >= 0");
    if (crossover_rate < 0.0 || crossover_rate > 1.0)
        throw ConfigError("ga: crossover_rate must be in [0, 1]");
    if (mutation_rate < 0.0 || mutation_rate > 1.0)
        throw ConfigError("ga: mutation_rate must be in [0, 1]");
    if (elitism < 0 || elitism >= population)
        throw ConfigError("ga: elitism must be in [0, population)");
}

AllocationResult solve_allocation(const Scenario& scenario, const GaConfig& config,
                                  const GaProgressFn& progress) {
    config.validate();
    const int n_tasks = scenario.task_count();
    const int n_uavs = scenario.uav_count();
    if (n_tasks < 1 || n_uavs < 1) throw ConfigError("allocation: need at least 1 task and 1 UAV");

    std::mt19937_64 rng(config.rng_seed);
    std::vector<Chromosome> pop(static_cast<std::size_t>(config.population));
    for (Chromosome& c : pop) {
        c = random_chromosome(rng, n_tasks, n_uavs);
        evaluate(c, scenario);
    }
    auto by_cost = [](const Chromosome& a, const Chromosome& b) { return a.cost < b.cost; };
    std::stable_sort(pop.begin(), pop.end(), by_cost);

    for (int gen = 0; gen < config.generations; ++gen) {
        std::vector<Chromosome> next;
        next.reserve(pop.size());
        for (int e = 0; e < config.elitism; ++e) next.push_back(pop[static_cast<std::size_t>(e)]);
        while (next.size() < pop.size()) {
            Chromosome child = tournament(pop, rng);
            if (std::uniform_real_distribution<double>(0.0, 1.0)(rng) < config.crossover_rate) {
                const Chromosome& other = tournament(pop, rng);
                child.perm = order_crossover(child.perm, other.perm, rng);
                // Mix split points, then repair to a valid sorted cut set.
                for (std::size_t i = 0; i < child.splits.size(); ++i)
                    if (rand_int(rng, 0, 1) == 1) child.splits[i] = other.splits[i];
                repair_splits(child.splits, n_tasks);
            }
            if (std::uniform_real_distribution<double>(0.0, 1.0)(rng) < config.mutation_rate &&
                n_tasks >= 2) {
                const int i = rand_int(rng, 0, n_tasks - 1);
                const int j = rand_int(rng, 0, n_tasks - 1);
                std::swap(child.perm[static_cast<std::size_t>(i)],
                          child.perm[static_cast<std::size_t>(j)]);
            }
            if (!child.splits.empty() &&
                std::uniform_real_distribution<double>(0.0, 1.0)(rng) < config.mutation_rate) {
                const int i = rand_int(rng, 0, static_cast<int>(child.splits.size()) - 1);
                child.splits[static_cast<std::size_t>(i)] += rand_int(rng, 0, 1) == 1 ? 1 : -1;
                repair_splits(child.splits, n_tasks);
            }
            evaluate(child, scenario);
            next.push_back(std::move(child));
        }
        pop = std::move(next);
        std::stable_sort(pop.begin(), pop.end(), by_cost);
        if (progress) progress(gen, pop.front().cost);
    }

    AllocationResult result;
    result.assignment = decode(pop.front(), n_uavs);
    result.cost = allocation_cost(result.assignment, scenario);
    return result;
}

AllocationResult brute_force_allocation(const Scenario& scenario, std::uint64_t max_size) {
    const int n_tasks = scenario.task_count();
    const int n_uavs = scenario.uav_count();
    if (n_tasks < 1 || n_uavs < 1) throw ConfigError("allocation: need at least 1 task and 1 UAV");
    if (n_tasks > 7 || n_uavs > 3)
        throw OracleRefusedError("brute force refused: instance too large (N=" +
                                 std::to_string(n_tasks) + ", K=" + std::to_string(n_uavs) +
                                 "; guard is N <= 7, K <= 3)");
    // Candidate count: N! permutations x C(N+K-1, K-1) split placements.
    std::uint64_t count = 1;
    for (int i = 2; i <= n_tasks; ++i) count *= static_cast<std::uint64_t>(i);
    std::uint64_t splits = 1;
    for (int i = 1; i <= n_uavs - 1; ++i)
        splits = splits * static_cast<std::uint64_t>(n_tasks + i) / static_cast<std::uint64_t>(i);
    count *= splits;
    if (count > max_size)
        throw OracleRefusedError("brute force refused: " + std::to_string(count) +
                                 " candidates exceed the max_size guard of " +
                                 std::to_string(max_size));

    std::vector<int> perm(static_cast<std::size_t>(n_tasks));
    std::iota(perm.begin(), perm.end(), 0);
    Chromosome best;
    do {
        // Enumerate nondecreasing split points via K-1 nested counters.
        std::vector<int> cut(static_cast<std::size_t>(n_uavs - 1), 0);
        while (true) {
            Chromosome c;
            c.perm = perm;
            c.splits = cut;
            evaluate(c, scenario);
            if (c.cost < best.cost) best = c;
            int level = n_uavs - 2;
            while (level >= 0 && cut[static_cast<std::size_t>(level)] == n_tasks) --level;
            if (level < 0) break;
            ++cut[static_cast<std::size_t>(level)];
            for (std::size_t j = static_cast<std::size_t>(level) + 1; j < cut.size(); ++j)
                cut[j] = cut[static_cast<std::size_t>(level)];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    AllocationResult result;
    result.assignment = decode(best, n_uavs);
    result.cost = allocation_cost(result.assignment, scenario);
    return result;
}

} // namespace swarmplan
