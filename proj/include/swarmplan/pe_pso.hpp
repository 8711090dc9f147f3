#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace swarmplan {

// Per-dimension decision-space box.
struct BoundsNd {
    std::vector<double> lower;
    std::vector<double> upper;

    std::size_t dim() const { return lower.size(); }
    static BoundsNd uniform(std::size_t dim, double lo, double hi);
};

struct ParamRanges {
    double w_min = 0.4, w_max = 0.9;
    double c1_min = 1.0, c1_max = 2.0;
    double c2_min = 1.0, c2_max = 2.0;
};

struct PsoParams {
    double w = 0.7;
    double c1 = 1.5;
    double c2 = 1.5;
};

// Swarm configuration. Defaults follow the persistent-exploration setup:
// 100 particles, half the swarm reinitialized per iteration, 10 entropy bins,
// V_max = 0.2 * (upper - lower) per dimension.
struct SwarmConfig {
    int n_particles = 100;
    double reset_rate = 0.5; // fraction reinitialized each iteration, in (0,1)
    ParamRanges ranges;
    int entropy_bins = 10;
    std::vector<double> v_max; // per dimension; empty = 0.2 * range
    BoundsNd bounds;
    std::uint64_t rng_seed = 0;

    // Baseline switches: turning both off yields a fixed-parameter PSO with
    // no reinitialization.
    bool persistent_exploration = true;
    bool entropy_adaptation = true;
    PsoParams fixed_params{0.7, 1.5, 1.5};

    std::vector<double> effective_v_max() const;
    void validate() const; // throws ConfigError

    static SwarmConfig defaults(BoundsNd bounds, std::uint64_t seed);
    static SwarmConfig vanilla(BoundsNd bounds, std::uint64_t seed);
};

struct Particle {
    std::vector<double> position;
    std::vector<double> velocity;
    std::vector<double> pbest;
    double pbest_fitness;
};

// Full optimizer state, a value type. The RNG engine lives here so that a
// (config, seed) pair determines the entire state trajectory.
struct SwarmState {
    std::vector<Particle> particles;
    std::vector<double> gbest;
    double gbest_fitness;
    double entropy = 0.0;
    PsoParams params;
    int iteration = 0;
    std::mt19937_64 rng;
};

// One fitness evaluation: the scalar to minimize plus a legality flag used
// for trajectory-pool insertion (always true for plain objective functions).
struct Evaluation {
    double fitness;
    bool legal = true;
};

using EvalFn = std::function<Evaluation(std::span<const double>)>;
using FitnessFn = std::function<double(std::span<const double>)>;

// Per-iteration optimizer metrics emitted to an optional sink.
struct IterationRecord {
    int iteration = 0;
    double gbest_fitness = 0.0;
    double entropy = 0.0;
    double w = 0.0, c1 = 0.0, c2 = 0.0;
    std::size_t pool_size = 0;
    int n_reinitialized = 0;
};

using MetricsSink = std::function<void(const IterationRecord&)>;

// Shannon entropy of the m-bin equal-width histogram of the finite fitness
// values, in nats; 0 when all values coincide. Throws InputError when no
// finite value is present.
double compute_entropy(std::span<const double> fitnesses, int bins);

// Entropy-linear parameter schedule with H_max = ln(bins):
//   w  = w_min  + (w_max  - w_min ) * H/H_max
//   c1 = c1_min + (c1_max - c1_min) * (1 - H/H_max)
//   c2 = c2_min + (c2_max - c2_min) * H/H_max
// H is clamped into [0, H_max]; the endpoints are returned exactly.
PsoParams adapt_params(double entropy, const SwarmConfig& config);

// Indices of the floor(reset_rate * N) worst (largest) fitness values,
// ties broken toward lower indices; returned sorted ascending.
std::vector<std::size_t> select_worst(std::span<const double> fitnesses, double reset_rate);

// Redraw position ~ U(bounds) and velocity ~ U(-v_max, v_max) for the given
// particles; each personal best is reset to the fresh position with a
// pending (+inf) fitness re-evaluated on the next step. gbest is untouched.
void reinitialize(SwarmState& state, std::span<const std::size_t> indices,
                  const SwarmConfig& config);

// Pool of legal candidate decision vectors, kept sorted by fitness ascending
// and truncated to capacity (worst evicted).
struct PoolEntry {
    std::vector<double> decision;
    double fitness;
};

class TrajectoryPool {
public:
    explicit TrajectoryPool(std::size_t capacity = 50);

    // Inserts only when `legal` and the fitness beats the current worst once
    // full. Returns whether the entry was stored.
    bool insert(std::span<const double> decision, double fitness, bool legal);

    // Entry with minimum fitness; nullptr when empty.
    const PoolEntry* best() const;

    std::size_t size() const { return entries_.size(); }
    std::size_t capacity() const { return capacity_; }
    bool empty() const { return entries_.empty(); }
    std::span<const PoolEntry> entries() const { return entries_; }
    void clear() { entries_.clear(); }

private:
    std::vector<PoolEntry> entries_;
    std::size_t capacity_;
};

// Fresh swarm: uniform positions/velocities, personal bests pending, global
// best unset (+inf) until the first step evaluates the swarm.
SwarmState init_swarm(const SwarmConfig& config);

// One optimizer iteration: evaluate, update bests, adapt parameters from the
// fitness entropy, move with per-component r1/r2 and velocity/position
// clamping, reinitialize the worst floor(reset_rate*N) particles, and feed
// the evaluated candidates to `pool` (legal ones only). Non-finite fitness
// values are treated as +inf, never as errors.
void step(SwarmState& state, const EvalFn& evaluate, const SwarmConfig& config,
          TrajectoryPool* pool = nullptr, const MetricsSink& metrics = {});

// Convenience driver: init + `iterations` steps of a plain objective.
struct MinimizeResult {
    std::vector<double> best;
    double best_fitness;
    std::vector<IterationRecord> history;
};

MinimizeResult minimize(const FitnessFn& objective, const SwarmConfig& config, int iterations,
                        bool keep_history = false);

} // namespace swarmplan
