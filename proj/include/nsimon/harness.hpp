#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "nsimon/noise.hpp"
#include "nsimon/solvers.hpp"
#include "nsimon/stats.hpp"
#include "nsimon/topology.hpp"
#include "nsimon/transpile.hpp"

namespace nsimon {

std::string_view library_version();

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view text);

std::filesystem::path default_topology_path();
std::filesystem::path default_noise_path();

/// Shared state of one CLI invocation. Every output file starts with '#'
/// metadata lines (tool version, command, seed, workers, config hash) and
/// depends only on these fields and the command arguments.
struct RunContext {
    std::uint64_t seed = 1;
    int workers = 1;
    std::filesystem::path out_dir = ".";
    TopologyGraph topology = TopologyGraph::ibmq16();
    NoiseParams noise;

    /// Metadata block for `command` with its arguments in canonical form.
    std::string header(std::string_view command, std::string_view arguments) const;
    /// Writes header + body to out_dir/name and returns the path.
    std::filesystem::path write(const std::string& name, std::string_view command, std::string_view arguments,
                                const std::string& body) const;
};

struct TranspileRow {
    int n = 0;
    CircuitNorm norm;
    Configuration config;
    bool equivalent = false;
};

/// Minimum-CN configuration per n, the compiled circuit as JSON
/// and an equivalence check against the logical circuit. Writes
/// transpile_report.csv and circuit_n<n>.json.
std::vector<TranspileRow> cmd_transpile_report(const RunContext& ctx, int n_min, int n_max);

/// Noisy run of the compiled minimum-CN circuit. Writes measure_n<n>.csv and
/// measure_stats_n<n>.csv.
MeasurementMultiset cmd_measure(const RunContext& ctx, int n, std::uint64_t shots);

/// Technique names in reporting order.
const std::vector<std::string>& smoothing_techniques();

/// Runs the requested techniques (names from smoothing_techniques()) with
/// `configs` permutation configurations of `shots` shots each. Writes
/// smooth_<technique>_n<n>.csv per technique and stats_n<n>.csv.
std::vector<NamedQualityRow> cmd_smooth(const RunContext& ctx, int n, std::uint64_t shots, std::size_t configs,
                                        const std::vector<std::string>& techniques);

/// Quality row of a multiset CSV against period s. Writes stats_<label>.csv.
NamedQualityRow cmd_stats(const RunContext& ctx, const std::filesystem::path& input, const BitVec& s,
                          const std::string& label);

/// Per-n mean loop counts of Period (random nonzero s per trial) and Pooled
/// LSN (s = 0^{n-2}11, one pool of pool_size LSN samples per n at taus[n -
/// n_min]). Trial t of dimension n uses its own stream, so the result does
/// not depend on the worker count. Writes crossover.csv.
std::vector<SolverRow> cmd_crossover(const RunContext& ctx, int n_min, int n_max, const std::vector<double>& taus,
                                     std::uint64_t trials, std::size_t pool_size);

/// Error rates of the smoothed hardware data for n = 2..7.
const std::vector<double>& reference_taus();

struct ReductionVerdict {
    std::string direction;
    std::string mode;
    std::string metric;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

/// mode "exact" (n <= 12): largest deviation over every z with <z, s> = 1,
/// threshold 1e-12. mode "statistical": chi-square p-values on `samples`
/// draws, threshold 0.01. Writes reduction_check.csv.
std::vector<ReductionVerdict> cmd_reduction_check(const RunContext& ctx, int n, double tau, std::uint64_t samples,
                                                  const std::string& mode);

/// algorithm: "period", "pooled-lsn" or "pooled-gauss". Runs `trials`
/// solves and reports mean loops; throws Error if a solver returns a wrong
/// period. Writes solve_<algorithm>_n<n>.csv.
SolverRow cmd_solve(const RunContext& ctx, const std::string& algorithm, int n, double tau, std::uint64_t trials,
                    std::size_t pool_size);

}  // namespace nsimon
