#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "swarmplan/pe_pso.hpp"

namespace swarmplan {

// Analytic benchmark with a known global optimum.
//   sphere      sum x^2                       [-100, 100]      f* = 0 at 0
//   rosenbrock  sum 100(x_{i+1}-x_i^2)^2      [-30, 30]        f* = 0 at 1
//               + (1-x_i)^2
//   rastrigin   10 d + sum x^2 - 10cos(2πx)   [-5.12, 5.12]    f* = 0 at 0
//   ackley      -20 exp(-0.2 sqrt(mean x^2))  [-32.768,32.768] f* = 0 at 0
//               - exp(mean cos 2πx) + 20 + e
//   griewank    sum x^2/4000 - prod cos(x_i/  [-600, 600]      f* = 0 at 0
//               sqrt(i)) + 1
//   schwefel    sum c - x sin(sqrt|x|)        [-500, 500]      f* = 0 at
//               (c = 418.98288727243369)                       420.96874635998205
struct BenchmarkFunction {
    std::string name;
    int dimension = 0;
    double lower = 0.0;
    double upper = 0.0;
    double global_minimum_value = 0.0;
    std::vector<double> global_minimizer;
    double (*fn)(std::span<const double>) = nullptr;
};

std::vector<std::string> benchmark_names();
BenchmarkFunction make_benchmark(const std::string& name, int dimension);
std::vector<BenchmarkFunction> benchmark_suite(int dimension);

// Evaluate with a dimension check; throws InputError on mismatch.
double evaluate_benchmark(const BenchmarkFunction& fn, std::span<const double> x);

struct ComparisonConfig {
    std::vector<std::string> functions; // empty = full suite
    int dimension = 10;
    int n_seeds = 10;       // must be >= 2
    int iterations = 200;
    int n_particles = 100;
    std::uint64_t base_seed = 1;
    double threshold_offset = 1e-2; // iterations-to-threshold target: f* + offset
};

// One optimizer run on one function with one seed.
struct RunRecord {
    std::string function;
    std::string optimizer; // "pe_pso" | "vanilla_pso"
    int seed_index = 0;
    double final_fitness = 0.0;
    double wall_ms = 0.0;
    int iterations_to_threshold = 0; // capped at `iterations` when unreached
};

// Aggregate per (function, optimizer) pair.
struct ComparisonRow {
    std::string function;
    std::string optimizer;
    int seeds = 0;
    double fitness_mean = 0.0;
    double fitness_std = 0.0;
    double time_mean_ms = 0.0;
    double mean_iterations_to_threshold = 0.0;
};

struct ComparisonReport {
    std::vector<ComparisonRow> rows;
    std::vector<RunRecord> runs;
};

// Run both optimizers over the configured functions and seeds. Independent
// runs are distributed over the SWARMPLAN_THREADS budget; aggregation order
// is fixed, so fitness statistics are deterministic for a given base_seed.
// The vanilla baseline is the same update rule with fixed w = 0.7,
// c1 = c2 = 1.5, no reinitialization and no entropy adaptation.
ComparisonReport run_comparison(const ComparisonConfig& config);

// Recompute aggregate rows from per-run records (pure; used for reporting
// and verification).
std::vector<ComparisonRow> aggregate_runs(const std::vector<RunRecord>& runs);

// bench_report.csv: function, optimizer, seed-count, fitness-mean,
// fitness-std, time-mean-ms.
void write_bench_report(const std::vector<ComparisonRow>& rows, std::ostream& out);
std::string format_comparison_table(const std::vector<ComparisonRow>& rows);

} // namespace swarmplan
