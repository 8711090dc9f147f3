#include "swarmplan/pe_pso.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "swarmplan/errors.hpp"

namespace swarmplan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

} // namespace

BoundsNd BoundsNd::uniform(std::size_t dim, double lo, double hi) {
    BoundsNd b;
    b.lower.assign(dim, lo);
    b.upper.assign(dim, hi);
    return b;
}

std::vector<double> SwarmConfig::effective_v_max() const {
    if (!v_max.empty()) return v_max;
    std::vector<double> v(bounds.dim());
    for (std::size_t d = 0; d < v.size(); ++d) v[d] = 0.2 * (bounds.upper[d] - bounds.lower[d]);
    return v;
}

void SwarmConfig::validate() const {
    if (n_particles < 2) throw ConfigError("swarm: n_particles must be >= 2");
    if (!(reset_rate > 0.0 && reset_rate < 1.0))
        throw ConfigError("swarm: reset_rate must be in (0, 1)");
    if (entropy_bins < 2) throw ConfigError("swarm: entropy_bins must be >= 2");
    if (!(ranges.w_min <= ranges.w_max) || !(ranges.c1_min <= ranges.c1_max) ||
        !(ranges.c2_min <= ranges.c2_max))
        throw ConfigError("swarm: parameter ranges must satisfy min <= max");
    if (bounds.dim() == 0 || bounds.upper.size() != bounds.lower.size())
        throw ConfigError("swarm: bounds must cover at least one dimension");
    for (std::size_t d = 0; d < bounds.dim(); ++d)
        if (!(bounds.lower[d] < bounds.upper[d]))
            throw ConfigError("swarm: bounds[" + std::to_string(d) + "] must satisfy lower < upper");
    if (!v_max.empty()) {
        if (v_max.size() != bounds.dim()) throw ConfigError("swarm: v_max dimension mismatch");
        for (double v : v_max)
            if (!(v > 0.0)) throw ConfigError("swarm: v_max entries must be > 0");
    }
}

SwarmConfig SwarmConfig::defaults(BoundsNd bounds, std::uint64_t seed) {
    SwarmConfig c;
    c.bounds = std::move(bounds);
    c.rng_seed = seed;
    return c;
}

SwarmConfig SwarmConfig::vanilla(BoundsNd bounds, std::uint64_t seed) {
    SwarmConfig c = defaults(std::move(bounds), seed);
    c.persistent_exploration = false;
    c.entropy_adaptation = false;
    return c;
}

double compute_entropy(std::span<const double> fitnesses, int bins) {
    if (bins < 2) throw ConfigError("compute_entropy: bins must be >= 2");
    double lo = kInf, hi = -kInf;
    std::size_t n = 0;
    for (double f : fitnesses) {
        if (!std::isfinite(f)) continue;
        lo = std::min(lo, f);
        hi = std::max(hi, f);
        ++n;
    }
    if (n == 0) throw InputError("compute_entropy: no finite fitness values");
    if (hi == lo) return 0.0;

    std::vector<std::size_t> counts(static_cast<std::size_t>(bins), 0);
    const double scale = static_cast<double>(bins) / (hi - lo);
    for (double f : fitnesses) {
        if (!std::isfinite(f)) continue;
        auto bin = static_cast<long>((f - lo) * scale);
        bin = std::clamp(bin, 0L, static_cast<long>(bins - 1));
        ++counts[static_cast<std::size_t>(bin)];
    }
    double entropy = 0.0;
    for (std::size_t count : counts) {
        if (count == 0) continue;
        const double q = static_cast<double>(count) / static_cast<double>(n);
        entropy -= q * std::log(q);
    }
    return entropy;
}

PsoParams adapt_params(double entropy, const SwarmConfig& config) {
    const ParamRanges& r = config.ranges;
    const double h_max = std::log(static_cast<double>(config.entropy_bins));
    if (!(h_max > 0.0))
        return {0.5 * (r.w_min + r.w_max), 0.5 * (r.c1_min + r.c1_max), 0.5 * (r.c2_min + r.c2_max)};
    if (!(entropy > 0.0)) return {r.w_min, r.c1_max, r.c2_min};
    if (entropy >= h_max) return {r.w_max, r.c1_min, r.c2_max};
    const double t = entropy / h_max;
    return {r.w_min + (r.w_max - r.w_min) * t,
            r.c1_min + (r.c1_max - r.c1_min) * (1.0 - t),
            r.c2_min + (r.c2_max - r.c2_min) * t};
}

std::vector<std::size_t> select_worst(std::span<const double> fitnesses, double reset_rate) {
    if (!(reset_rate > 0.0 && reset_rate < 1.0))
        throw ConfigError("select_worst: reset_rate must be in (0, 1)");
    const std::size_t n = fitnesses.size();
    const auto count = static_cast<std::size_t>(
        std::floor(reset_rate * static_cast<double>(n)));
    std::vector<double> sanitized(fitnesses.begin(), fitnesses.end());
    for (double& f : sanitized)
        if (std::isnan(f)) f = kInf;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (sanitized[a] != sanitized[b]) return sanitized[a] > sanitized[b];
        return a < b;
    });
    order.resize(count);
    std::sort(order.begin(), order.end());
    return order;
}

void reinitialize(SwarmState& state, std::span<const std::size_t> indices,
                  const SwarmConfig& config) {
    const std::vector<double> v_max = config.effective_v_max();
    for (std::size_t idx : indices) {
        Particle& p = state.particles.at(idx);
        for (std::size_t d = 0; d < config.bounds.dim(); ++d)
            p.position[d] = uniform(state.rng, config.bounds.lower[d], config.bounds.upper[d]);
        for (std::size_t d = 0; d < config.bounds.dim(); ++d)
            p.velocity[d] = uniform(state.rng, -v_max[d], v_max[d]);
        p.pbest = p.position;
        p.pbest_fitness = kInf; // re-evaluated on the next step
    }
}

TrajectoryPool::TrajectoryPool(std::size_t capacity) : capacity_(capacity) {
    if (capacity_ == 0) throw ConfigError("pool capacity must be >= 1");
}

bool TrajectoryPool::insert(std::span<const double> decision, double fitness, bool legal) {
    if (!legal || !std::isfinite(fitness)) return false;
    if (entries_.size() == capacity_ && fitness >= entries_.back().fitness) return false;
    const auto at = std::upper_bound(entries_.begin(), entries_.end(), fitness,
                                     [](double f, const PoolEntry& e) { return f < e.fitness; });
    entries_.insert(at, PoolEntry{{decision.begin(), decision.end()}, fitness});
    if (entries_.size() > capacity_) entries_.pop_back();
    return true;
}

const PoolEntry* TrajectoryPool::best() const {
    return entries_.empty() ? nullptr : &entries_.front();
}

SwarmState init_swarm(const SwarmConfig& config) {
    config.validate();
    const std::size_t dim = config.bounds.dim();
    const std::vector<double> v_max = config.effective_v_max();
    SwarmState state;
    state.rng.seed(config.rng_seed);
    state.particles.resize(static_cast<std::size_t>(config.n_particles));
    for (Particle& p : state.particles) {
        p.position.resize(dim);
        p.velocity.resize(dim);
        for (std::size_t d = 0; d < dim; ++d)
            p.position[d] = uniform(state.rng, config.bounds.lower[d], config.bounds.upper[d]);
        for (std::size_t d = 0; d < dim; ++d)
            p.velocity[d] = uniform(state.rng, -v_max[d], v_max[d]);
        p.pbest = p.position;
        p.pbest_fitness = kInf;
    }
    state.gbest = state.particles.front().position;
    state.gbest_fitness = kInf;
    state.params = config.entropy_adaptation ? adapt_params(0.0, config) : config.fixed_params;
    return state;
}

void step(SwarmState& state, const EvalFn& evaluate, const SwarmConfig& config,
          TrajectoryPool* pool, const MetricsSink& metrics) {
    const std::size_t n = state.particles.size();
    const std::size_t dim = config.bounds.dim();
    const std::vector<double> v_max = config.effective_v_max();

    // 1. Evaluate the swarm at its current positions; non-finite -> +inf.
    std::vector<double> fitness(n);
    std::vector<char> legal(n);
    std::vector<std::vector<double>> candidates;
    if (pool) candidates.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Evaluation e = evaluate(state.particles[i].position);
        fitness[i] = std::isfinite(e.fitness) ? e.fitness : kInf;
        legal[i] = e.legal && std::isfinite(e.fitness);
        if (pool) candidates.push_back(state.particles[i].position);
    }

    // 2. Personal and global bests.
    for (std::size_t i = 0; i < n; ++i) {
        Particle& p = state.particles[i];
        if (fitness[i] < p.pbest_fitness) {
            p.pbest = p.position;
            p.pbest_fitness = fitness[i];
        }
        if (p.pbest_fitness < state.gbest_fitness) {
            state.gbest_fitness = p.pbest_fitness;
            state.gbest = p.pbest;
        }
    }

    // 3. Fitness entropy and parameter adaptation.
    bool any_finite = false;
    for (double f : fitness)
        if (std::isfinite(f)) { any_finite = true; break; }
    state.entropy = any_finite ? compute_entropy(fitness, config.entropy_bins) : 0.0;
    state.params = config.entropy_adaptation ? adapt_params(state.entropy, config)
                                             : config.fixed_params;

    // 4. Velocity/position update, clamped; clamped components zero their
    // velocity.
    const PsoParams prm = state.params;
    for (std::size_t i = 0; i < n; ++i) {
        Particle& p = state.particles[i];
        for (std::size_t d = 0; d < dim; ++d) {
            const double r1 = uniform(state.rng, 0.0, 1.0);
            const double r2 = uniform(state.rng, 0.0, 1.0);
            double v = prm.w * p.velocity[d] + prm.c1 * r1 * (p.pbest[d] - p.position[d]) +
                       prm.c2 * r2 * (state.gbest[d] - p.position[d]);
            v = std::clamp(v, -v_max[d], v_max[d]);
            double x = p.position[d] + v;
            if (x < config.bounds.lower[d]) { x = config.bounds.lower[d]; v = 0.0; }
            else if (x > config.bounds.upper[d]) { x = config.bounds.upper[d]; v = 0.0; }
            p.position[d] = x;
            p.velocity[d] = v;
        }
    }

    // 5. Persistent exploration: reinitialize the worst floor(alpha*N).
    int n_reinit = 0;
    if (config.persistent_exploration) {
        const std::vector<std::size_t> worst = select_worst(fitness, config.reset_rate);
        reinitialize(state, worst, config);
        n_reinit = static_cast<int>(worst.size());
    }

    // 6. Feed evaluated candidates to the pool (legal ones only).
    if (pool)
        for (std::size_t i = 0; i < n; ++i)
            pool->insert(candidates[i], fitness[i], legal[i] != 0);

    state.iteration += 1;
    if (metrics) {
        IterationRecord rec;
        rec.iteration = state.iteration;
        rec.gbest_fitness = state.gbest_fitness;
        rec.entropy = state.entropy;
        rec.w = prm.w;
        rec.c1 = prm.c1;
        rec.c2 = prm.c2;
        rec.pool_size = pool ? pool->size() : 0;
        rec.n_reinitialized = n_reinit;
        metrics(rec);
    }
}

MinimizeResult minimize(const FitnessFn& objective, const SwarmConfig& config, int iterations,
                        bool keep_history) {
    if (iterations < 0) throw ConfigError("minimize: iterations must be >= 0");
    const EvalFn eval = [&objective](std::span<const double> x) {
        return Evaluation{objective(x), true};
    };
    MinimizeResult result;
    MetricsSink sink;
    if (keep_history)
        sink = [&result](const IterationRecord& rec) { result.history.push_back(rec); };
    SwarmState state = init_swarm(config);
    for (int it = 0; it < iterations; ++it) step(state, eval, config, nullptr, sink);
    result.best = state.gbest;
    result.best_fitness = state.gbest_fitness;
    return result;
}

} // namespace swarmplan
