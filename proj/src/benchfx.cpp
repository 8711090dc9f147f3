#include "swarmplan/benchfx.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "swarmplan/errors.hpp"
#include "swarmplan/util.hpp"

namespace swarmplan {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// x* and x*·sin(sqrt(x*)) of the per-coordinate Schwefel term, at double
// precision, so the shifted function is 0 at its minimizer.
constexpr double kSchwefelArgmin = 420.96874635998205;
constexpr double kSchwefelOffset = 418.98288727243369;

double sphere(std::span<const double> x) {
    double sum = 0.0;
    for (double v : x) sum += v * v;
    return sum;
}

double rosenbrock(std::span<const double> x) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = 1.0 - x[i];
        sum += 100.0 * a * a + b * b;
    }
    return sum;
}

double rastrigin(std::span<const double> x) {
    double sum = 10.0 * static_cast<double>(x.size());
    for (double v : x) sum += v * v - 10.0 * std::cos(kTwoPi * v);
    return sum;
}

double ackley(std::span<const double> x) {
    const double d = static_cast<double>(x.size());
    double sq = 0.0, cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(kTwoPi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sq / d)) - std::exp(cs / d) + 20.0 + std::numbers::e;
}

double griewank(std::span<const double> x) {
    double sum = 0.0, prod = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += x[i] * x[i] / 4000.0;
        prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return sum - prod + 1.0;
}

double schwefel(std::span<const double> x) {
    double sum = 0.0;
    for (double v : x) sum += kSchwefelOffset - v * std::sin(std::sqrt(std::abs(v)));
    return sum;
}

struct Definition {
    const char* name;
    double lower, upper;
    double minimizer_coord;
    double (*fn)(std::span<const double>);
};

constexpr Definition kSuite[] = {
    {"sphere", -100.0, 100.0, 0.0, sphere},
    {"rosenbrock", -30.0, 30.0, 1.0, rosenbrock},
    {"rastrigin", -5.12, 5.12, 0.0, rastrigin},
    {"ackley", -32.768, 32.768, 0.0, ackley},
    {"griewank", -600.0, 600.0, 0.0, griewank},
    {"schwefel", -500.0, 500.0, kSchwefelArgmin, schwefel},
};

} // namespace

std::vector<std::string> benchmark_names() {
    std::vector<std::string> names;
    for (const Definition& d : kSuite) names.emplace_back(d.name);
    return names;
}

BenchmarkFunction make_benchmark(const std::string& name, int dimension) {
    if (dimension < 1) throw ConfigError("benchmark dimension must be >= 1");
    for (const Definition& d : kSuite) {
        if (name != d.name) continue;
        BenchmarkFunction f;
        f.name = d.name;
        f.dimension = dimension;
        f.lower = d.lower;
        f.upper = d.upper;
        f.global_minimum_value = 0.0;
        f.global_minimizer.assign(static_cast<std::size_t>(dimension), d.minimizer_coord);
        f.fn = d.fn;
        return f;
    }
    throw InputError("unknown benchmark function \"" + name + "\"");
}

std::vector<BenchmarkFunction> benchmark_suite(int dimension) {
    std::vector<BenchmarkFunction> suite;
    for (const Definition& d : kSuite) suite.push_back(make_benchmark(d.name, dimension));
    return suite;
}

double evaluate_benchmark(const BenchmarkFunction& fn, std::span<const double> x) {
    if (static_cast<int>(x.size()) != fn.dimension)
        throw InputError("benchmark \"" + fn.name + "\": expected dimension " +
                         std::to_string(fn.dimension) + ", got " + std::to_string(x.size()));
    return fn.fn(x);
}

namespace {

RunRecord execute_run(const BenchmarkFunction& fn, bool vanilla, int seed_index,
                      const ComparisonConfig& config) {
    const BoundsNd bounds =
        BoundsNd::uniform(static_cast<std::size_t>(fn.dimension), fn.lower, fn.upper);
    const std::uint64_t seed =
        mix_seed(config.base_seed, static_cast<std::uint64_t>(seed_index));
    SwarmConfig swarm = vanilla ? SwarmConfig::vanilla(bounds, seed)
                                : SwarmConfig::defaults(bounds, seed);
    swarm.n_particles = config.n_particles;

    const double threshold = fn.global_minimum_value + config.threshold_offset;
    RunRecord rec;
    rec.function = fn.name;
    rec.optimizer = vanilla ? "vanilla_pso" : "pe_pso";
    rec.seed_index = seed_index;
    rec.iterations_to_threshold = config.iterations;

    const FitnessFn objective = [&fn](std::span<const double> x) { return fn.fn(x); };
    const EvalFn eval = [&objective](std::span<const double> x) {
        return Evaluation{objective(x), true};
    };

    const auto t0 = std::chrono::steady_clock::now();
    SwarmState state = init_swarm(swarm);
    for (int it = 0; it < config.iterations; ++it) {
        step(state, eval, swarm);
        if (rec.iterations_to_threshold == config.iterations &&
            state.gbest_fitness <= threshold)
            rec.iterations_to_threshold = state.iteration;
    }
    rec.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0).count();
    rec.final_fitness = state.gbest_fitness;
    return rec;
}

} // namespace

ComparisonReport run_comparison(const ComparisonConfig& config) {
    if (config.n_seeds < 2) throw ConfigError("comparison: n_seeds must be >= 2");
    if (config.iterations < 1) throw ConfigError("comparison: iterations must be >= 1");
    std::vector<std::string> names = config.functions.empty() ? benchmark_names() : config.functions;

    struct Task {
        BenchmarkFunction fn;
        bool vanilla;
        int seed_index;
    };
    std::vector<Task> tasks;
    for (const std::string& name : names) {
        const BenchmarkFunction fn = make_benchmark(name, config.dimension);
        for (int opt = 0; opt < 2; ++opt)
            for (int s = 0; s < config.n_seeds; ++s) tasks.push_back({fn, opt == 1, s});
    }

    std::vector<RunRecord> runs(tasks.size());
    const int threads = std::min<int>(thread_budget(), static_cast<int>(tasks.size()));
    if (threads <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            runs[i] = execute_run(tasks[i].fn, tasks[i].vanilla, tasks[i].seed_index, config);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) {
            workers.emplace_back([&] {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) return;
                    runs[i] = execute_run(tasks[i].fn, tasks[i].vanilla, tasks[i].seed_index, config);
                }
            });
        }
        for (std::thread& w : workers) w.join();
    }

    ComparisonReport report;
    report.runs = std::move(runs);
    report.rows = aggregate_runs(report.runs);
    return report;
}

std::vector<ComparisonRow> aggregate_runs(const std::vector<RunRecord>& runs) {
    std::vector<ComparisonRow> rows;
    for (const RunRecord& run : runs) {
        auto row = std::find_if(rows.begin(), rows.end(), [&](const ComparisonRow& r) {
            return r.function == run.function && r.optimizer == run.optimizer;
        });
        if (row == rows.end()) {
            rows.push_back(ComparisonRow{run.function, run.optimizer, 0, 0.0, 0.0, 0.0, 0.0});
            row = rows.end() - 1;
        }
        row->seeds += 1;
        row->fitness_mean += run.final_fitness;
        row->time_mean_ms += run.wall_ms;
        row->mean_iterations_to_threshold += static_cast<double>(run.iterations_to_threshold);
    }
    for (ComparisonRow& row : rows) {
        row.fitness_mean /= row.seeds;
        row.time_mean_ms /= row.seeds;
        row.mean_iterations_to_threshold /= row.seeds;
    }
    for (ComparisonRow& row : rows) {
        double var = 0.0;
        int n = 0;
        for (const RunRecord& run : runs) {
            if (run.function != row.function || run.optimizer != row.optimizer) continue;
            var += (run.final_fitness - row.fitness_mean) * (run.final_fitness - row.fitness_mean);
            ++n;
        }
        row.fitness_std = n > 1 ? std::sqrt(var / (n - 1)) : 0.0;
    }
    return rows;
}

void write_bench_report(const std::vector<ComparisonRow>& rows, std::ostream& out) {
    out << "function,optimizer,seed-count,fitness-mean,fitness-std,time-mean-ms\n";
    for (const ComparisonRow& r : rows)
        out << r.function << "," << r.optimizer << "," << r.seeds << ","
            << format_double(r.fitness_mean) << "," << format_double(r.fitness_std) << ","
            << format_double(r.time_mean_ms) << "\n";
}

std::string format_comparison_table(const std::vector<ComparisonRow>& rows) {
    std::ostringstream out;
    out << std::left << std::setw(12) << "function" << std::setw(13) << "optimizer"
        << std::right << std::setw(7) << "seeds" << std::setw(14) << "mean" << std::setw(14)
        << "std" << std::setw(12) << "ms/run" << std::setw(12) << "it@thresh" << "\n";
    for (const ComparisonRow& r : rows) {
        out << std::left << std::setw(12) << r.function << std::setw(13) << r.optimizer
            << std::right << std::setw(7) << r.seeds << std::setw(14) << std::setprecision(5)
            << std::scientific << r.fitness_mean << std::setw(14) << r.fitness_std
            << std::fixed << std::setprecision(1) << std::setw(12) << r.time_mean_ms
            << std::setprecision(1) << std::setw(12) << r.mean_iterations_to_threshold << "\n";
        out.unsetf(std::ios::floatfield);
    }
    return out.str();
}

} // namespace swarmplan
