#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include "nsimon/circuit_io.hpp"
#include "nsimon/harness.hpp"
#include "nsimon/lsn.hpp"
#include "nsimon/reductions.hpp"
#include "nsimon/smoothing.hpp"
#include "nsimon/statevector.hpp"

#ifndef NSIMON_VERSION
#define NSIMON_VERSION "0.0.0"
#endif

namespace nsimon {

std::string_view library_version() { return NSIMON_VERSION; }

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::filesystem::path default_topology_path() {
    return std::filesystem::path(NSIMON_DATA_DIR) / "topology" / "ibmq16_melbourne.json";
}

std::filesystem::path default_noise_path() { return std::filesystem::path(NSIMON_DATA_DIR) / "noise" / "default.json"; }

std::string RunContext::header(std::string_view command, std::string_view arguments) const {
    std::ostringstream canon;
    canon << command << '|' << arguments << '|' << seed << '|' << topology_to_json(topology) << '|'
          << noise_to_json(noise);
    std::ostringstream out;
    out << "# tool: nsimon " << library_version() << '\n'
        << "# command: " << command << ' ' << arguments << '\n'
        << "# seed: " << seed << '\n'
        << "# workers: " << workers << '\n'
        << "# config-hash: " << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(canon.str()) << std::dec
        << '\n';
    return out.str();
}

std::filesystem::path RunContext::write(const std::string& name, std::string_view command, std::string_view arguments,
                                        const std::string& body) const {
    std::filesystem::create_directories(out_dir);
    const auto path = out_dir / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path.string());
    out << header(command, arguments) << body;
    return path;
}

namespace {

std::string args_string(std::initializer_list<std::pair<std::string_view, std::string>> args) {
    std::string out;
    for (const auto& [k, v] : args) {
        if (!out.empty()) out += ' ';
        out += "--";
        out += k;
        out += '=';
        out += v;
    }
    return out;
}

std::string fmt(double x, int digits = 8) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(digits) << x;
    return out.str();
}

std::string multiset_csv(const MeasurementMultiset& m) {
    std::ostringstream out;
    write_multiset_csv(out, m);
    return out.str();
}

std::string quality_csv(const std::vector<NamedQualityRow>& rows) {
    std::ostringstream out;
    write_quality_csv(out, rows);
    return out.str();
}

// Loop counts of `trials` independent runs, split into contiguous blocks
// across workers. run(t) must depend only on t.
std::vector<std::uint64_t> run_trials(std::uint64_t trials, int workers,
                                      const std::function<std::uint64_t(std::uint64_t)>& run) {
    std::vector<std::uint64_t> loops(trials);
    const auto w = static_cast<std::uint64_t>(std::max(1, workers));
    if (w == 1) {
        for (std::uint64_t t = 0; t < trials; ++t) loops[t] = run(t);
        return loops;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(w);
    for (std::uint64_t k = 0; k < w; ++k) {
        threads.emplace_back([&, k] {
            try {
                for (std::uint64_t t = k * trials / w; t < (k + 1) * trials / w; ++t) loops[t] = run(t);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return loops;
}

double log2_mean(const std::vector<std::uint64_t>& loops) {
    long double sum = 0;
    for (auto l : loops) sum += static_cast<long double>(l);
    return std::log2(static_cast<double>(sum / static_cast<long double>(loops.size())));
}

BitVec random_nonzero(int n, Rng& rng) {
    std::uint64_t s = 0;
    while (s == 0) s = rng() & low_mask(n);
    return BitVec(n, s);
}

std::uint64_t period_trial(int n, std::uint64_t stream_seed, std::uint64_t t) {
    Rng rng = make_stream(stream_seed, t);
    const BitVec s = random_nonzero(n, rng);
    const auto r = classical_period(SimonFunction::with_period(s));
    if (!r.s || *r.s != s) throw Error("Period returned a wrong period");
    return r.cost.loops;
}

std::vector<BitVec> lsn_pool(const LsnParams& params, std::size_t size, std::uint64_t seed) {
    Rng rng = make_stream(seed, 0);
    const LsnSampler sampler(params);
    std::vector<BitVec> pool;
    pool.reserve(size);
    for (std::size_t i = 0; i < size; ++i) pool.push_back(sampler(rng));
    return pool;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<TranspileRow> cmd_transpile_report(const RunContext& ctx, int n_min, int n_max) {
    const std::string command = "transpile-report";
    const std::string args = args_string({{"n-min", std::to_string(n_min)}, {"n-max", std::to_string(n_max)}});
    std::vector<TranspileRow> rows;
    std::ostringstream csv;
    csv << "n,CN,g1,g2,configuration,equivalent\n";
    for (int n = n_min; n <= n_max; ++n) {
        const SimonFunction f = SimonFunction::standard(n);
        const auto found = search_min_configuration(f, ctx.topology);
        const Circuit logical = build_simon_circuit(f);
        const Circuit compiled = compile(logical, ctx.topology, found.config);
        TranspileRow row{n, found.norm, found.config, circuits_equivalent(logical, compiled, 1e-9)};
        csv << n << ',' << row.norm.value() << ',' << row.norm.g1 << ',' << row.norm.g2 << ','
            << row.config.to_string() << ',' << (row.equivalent ? "true" : "false") << '\n';
        // JSON carries no '#' header.
        std::filesystem::create_directories(ctx.out_dir);
        std::ofstream(ctx.out_dir / ("circuit_n" + std::to_string(n) + ".json"), std::ios::binary)
            << circuit_to_json(compiled) << '\n';
        rows.push_back(std::move(row));
    }
    ctx.write("transpile_report.csv", command, args, csv.str());
    return rows;
}

MeasurementMultiset cmd_measure(const RunContext& ctx, int n, std::uint64_t shots) {
    const std::string args = args_string({{"n", std::to_string(n)}, {"shots", std::to_string(shots)}});
    const SimonFunction f = SimonFunction::standard(n);
    const auto found = search_min_configuration(f, ctx.topology);
    const Circuit compiled = compile(build_simon_circuit(f), ctx.topology, found.config);
    const auto m = sample_noisy(compiled, ctx.noise, shots, derive_seed(ctx.seed, 0), ctx.workers);
    ctx.write("measure_n" + std::to_string(n) + ".csv", "measure", args, multiset_csv(m));
    ctx.write("measure_stats_n" + std::to_string(n) + ".csv", "measure", args,
              quality_csv({{"none", quality_report(m, f.period())}}));
    return m;
}

const std::vector<std::string>& smoothing_techniques() {
    static const std::vector<std::string> names{"none",    "permutation", "double-flip", "permutation-double-flip",
                                                "hamming", "permutation-hamming"};
    return names;
}

std::vector<NamedQualityRow> cmd_smooth(const RunContext& ctx, int n, std::uint64_t shots, std::size_t configs,
                                        const std::vector<std::string>& techniques) {
    for (const auto& t : techniques) {
        const auto& known = smoothing_techniques();
        if (std::find(known.begin(), known.end(), t) == known.end()) throw RangeError("unknown technique " + t);
    }
    std::string joined;
    for (const auto& t : techniques) joined += (joined.empty() ? "" : ",") + t;
    const std::string args = args_string({{"n", std::to_string(n)},
                                          {"shots", std::to_string(shots)},
                                          {"configs", std::to_string(configs)},
                                          {"technique", joined}});

    const SimonFunction f = SimonFunction::standard(n);
    const auto& g = ctx.topology;
    const auto base = search_min_configuration(f, g).config;
    const Circuit compiled = compile(build_simon_circuit(f), g, base);
    Rng perm_rng = make_stream(ctx.seed, 1);
    const auto perm_configs = permutation_configurations(base, n, configs, perm_rng);
    const BitVec v = hamming_vector_for(f.period());

    // Each technique's data comes from a fixed child seed, so selecting a
    // subset of techniques does not change any of their outputs.
    auto none = [&] { return sample_noisy(compiled, ctx.noise, shots, derive_seed(ctx.seed, 0), ctx.workers); };
    auto perm = [&] {
        return permutation_smooth(f, g, perm_configs, shots, ctx.noise, derive_seed(ctx.seed, 2), ctx.workers);
    };
    auto produce = [&](const std::string& t) -> MeasurementMultiset {
        if (t == "none") return none();
        if (t == "permutation") return perm();
        if (t == "double-flip") return double_flip(f, g, base, ctx.noise, shots, derive_seed(ctx.seed, 3), ctx.workers).merged;
        if (t == "permutation-double-flip") {
            MeasurementMultiset out(n);
            const std::uint64_t s4 = derive_seed(ctx.seed, 4);
            for (std::size_t k = 0; k < perm_configs.size(); ++k) {
                out.merge(double_flip(f, g, perm_configs[k], ctx.noise, shots, derive_seed(s4, k), ctx.workers).merged);
            }
            return out;
        }
        if (t == "hamming") return hamming_smooth(none(), v);
        return hamming_smooth(perm(), v);
    };

    std::vector<NamedQualityRow> rows;
    for (const auto& t : smoothing_techniques()) {
        if (std::find(techniques.begin(), techniques.end(), t) == techniques.end()) continue;
        const auto m = produce(t);
        ctx.write("smooth_" + t + "_n" + std::to_string(n) + ".csv", "smooth", args, multiset_csv(m));
        rows.push_back({t, quality_report(m, f.period())});
    }
    ctx.write("stats_n" + std::to_string(n) + ".csv", "smooth", args, quality_csv(rows));
    return rows;
}

NamedQualityRow cmd_stats(const RunContext& ctx, const std::filesystem::path& input, const BitVec& s,
                          const std::string& label) {
    std::ifstream in(input);
    if (!in) throw ParseError("cannot open " + input.string());
    const auto m = read_multiset_csv(in);
    NamedQualityRow row{label, quality_report(m, s)};
    ctx.write("stats_" + label + ".csv", "stats",
              args_string({{"input", input.filename().string()}, {"period", s.to_string()}, {"label", label}}),
              quality_csv({row}));
    return row;
}

const std::vector<double>& reference_taus() {
    static const std::vector<double> taus{0.09347, 0.09479, 0.09546, 0.10954, 0.11602, 0.12398};
    return taus;
}

std::vector<SolverRow> cmd_crossover(const RunContext& ctx, int n_min, int n_max, const std::vector<double>& taus,
                                     std::uint64_t trials, std::size_t pool_size) {
    if (static_cast<int>(taus.size()) < n_max - n_min + 1) throw DimensionError("one tau per dimension required");
    std::string tau_list;
    for (double t : taus) tau_list += (tau_list.empty() ? "" : ",") + fmt(t, 5);
    const std::string args = args_string({{"n-min", std::to_string(n_min)},
                                          {"n-max", std::to_string(n_max)},
                                          {"taus", tau_list},
                                          {"trials", std::to_string(trials)},
                                          {"pool", std::to_string(pool_size)}});
    std::vector<SolverRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        const auto un = static_cast<std::uint64_t>(n);
        const std::uint64_t period_seed = derive_seed(ctx.seed, 3 * un);
        const auto period_loops =
            run_trials(trials, ctx.workers, [&](std::uint64_t t) { return period_trial(n, period_seed, t); });
        rows.push_back({"Period", n, 0.0, log2_mean(period_loops), trials, ctx.seed});

        const double tau = taus[static_cast<std::size_t>(n - n_min)];
        const SimonFunction f = SimonFunction::standard(n);
        const auto pool = lsn_pool(LsnParams(f.period(), tau), pool_size, derive_seed(ctx.seed, 3 * un + 1));
        const std::uint64_t trial_seed = derive_seed(ctx.seed, 3 * un + 2);
        const auto pooled_loops = run_trials(trials, ctx.workers, [&](std::uint64_t t) {
            Rng rng = make_stream(trial_seed, t);
            const auto r = pooled_lsn(f, pool, rng);
            if (!r.s || *r.s != f.period()) throw Error("Pooled LSN returned a wrong period");
            return r.cost.loops;
        });
        rows.push_back({"PooledLSN", n, tau, log2_mean(pooled_loops), trials, ctx.seed});
    }
    std::ostringstream csv;
    write_solver_csv(csv, rows);
    ctx.write("crossover.csv", "crossover", args, csv.str());
    return rows;
}

std::vector<ReductionVerdict> cmd_reduction_check(const RunContext& ctx, int n, double tau, std::uint64_t samples,
                                                  const std::string& mode) {
    const std::string args = args_string(
        {{"n", std::to_string(n)}, {"tau", fmt(tau, 5)}, {"samples", std::to_string(samples)}, {"mode", mode}});
    Rng rng = make_stream(ctx.seed, 0);
    const LsnParams params(random_nonzero(n, rng), tau);
    std::vector<ReductionVerdict> out;

    if (mode == "exact") {
        double lsn_lpn = 0.0;
        double lpn_lsn = 0.0;
        double round = 0.0;
        for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); ++z) {
            const BitVec bz(n, z);
            if (!inner_product(bz, params.s)) continue;
            lsn_lpn = std::max(lsn_lpn, lsn_to_lpn_exact_deviation(params, bz));
            lpn_lsn = std::max(lpn_lsn, lpn_to_lsn_exact_deviation(params, bz));
            round = std::max(round, round_trip_exact_deviation(params, bz));
        }
        out.push_back({"LSN->LPN", mode, "max_deviation", lsn_lpn, 1e-12, lsn_lpn < 1e-12});
        out.push_back({"LPN->LSN", mode, "max_deviation", lpn_lsn, 1e-12, lpn_lsn < 1e-12});
        out.push_back({"round-trip", mode, "max_deviation", round, 1e-12, round < 1e-12});
    } else if (mode == "statistical") {
        BitVec z = random_nonzero(n, rng);
        while (!inner_product(z, params.s)) z = random_nonzero(n, rng);
        const auto a = lsn_to_lpn_chi_square(params, z, samples, rng);
        const auto b = lpn_to_lsn_chi_square(params, z, samples, rng);
        out.push_back({"LSN->LPN", mode, "chi2_p_value", a.p_value, 0.01, a.p_value >= 0.01});
        out.push_back({"LPN->LSN", mode, "chi2_p_value", b.p_value, 0.01, b.p_value >= 0.01});
    } else {
        throw RangeError("mode must be 'exact' or 'statistical'");
    }

    std::ostringstream csv;
    csv << "direction,mode,n,tau,metric,value,threshold,verdict\n";
    for (const auto& v : out) {
        csv << v.direction << ',' << v.mode << ',' << n << ',' << fmt(tau, 5) << ',' << v.metric << ','
            << std::scientific << std::setprecision(6) << v.value << ',' << v.threshold << std::defaultfloat << ','
            << (v.pass ? "PASS" : "FAIL") << '\n';
    }
    ctx.write("reduction_check.csv", "reduction-check", args, csv.str());
    return out;
}

SolverRow cmd_solve(const RunContext& ctx, const std::string& algorithm, int n, double tau, std::uint64_t trials,
                    std::size_t pool_size) {
    const std::string args = args_string({{"algorithm", algorithm},
                                          {"n", std::to_string(n)},
                                          {"tau", fmt(tau, 5)},
                                          {"trials", std::to_string(trials)},
                                          {"pool", std::to_string(pool_size)}});
    std::vector<std::uint64_t> loops;
    if (algorithm == "period") {
        const std::uint64_t seed = derive_seed(ctx.seed, 0);
        loops = run_trials(trials, ctx.workers, [&](std::uint64_t t) { return period_trial(n, seed, t); });
    } else if (algorithm == "pooled-lsn") {
        const std::uint64_t seed = derive_seed(ctx.seed, 1);
        loops = run_trials(trials, ctx.workers, [&](std::uint64_t t) {
            Rng rng = make_stream(seed, t);
            const SimonFunction f = SimonFunction::with_period(random_nonzero(n, rng));
            const auto pool = lsn_pool(LsnParams(f.period(), tau), pool_size, rng());
            const auto r = pooled_lsn(f, pool, rng);
            if (!r.s || *r.s != f.period()) throw Error("Pooled LSN returned a wrong period");
            return r.cost.loops;
        });
    } else if (algorithm == "pooled-gauss") {
        const std::uint64_t seed = derive_seed(ctx.seed, 2);
        loops = run_trials(trials, ctx.workers, [&](std::uint64_t t) {
            Rng rng = make_stream(seed, t);
            const LpnParams params(random_nonzero(n, rng), tau);
            const LpnSampler sampler(params);
            std::vector<LpnSample> pool(pool_size);
            for (auto& s : pool) s = sampler(rng);
            std::vector<LpnSample> held(static_cast<std::size_t>(100 * n));
            for (auto& s : held) s = sampler(rng);
            const auto r = pooled_gauss_lpn(n, pool, majority_verifier(held, tau), rng);
            if (!r.s || *r.s != params.s) throw Error("Pooled Gauss returned a wrong secret");
            return r.cost.loops;
        });
    } else {
        throw RangeError("algorithm must be period, pooled-lsn or pooled-gauss");
    }
    SolverRow row{algorithm, n, algorithm == "period" ? 0.0 : tau, log2_mean(loops), trials, ctx.seed};
    std::ostringstream csv;
    write_solver_csv(csv, {row});
    ctx.write("solve_" + algorithm + "_n" + std::to_string(n) + ".csv", "solve", args, csv.str());
    return row;
}

}  // namespace nsimon
