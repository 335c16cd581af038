#include <iostream>

#include "CLI11.hpp"

#include "nsimon/harness.hpp"

using namespace nsimon;

namespace {

void print_rows(const std::vector<NamedQualityRow>& rows) { write_quality_csv(std::cout, rows); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Noisy Simon experiments: transpilation, smoothing, reductions and solvers"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    int workers = 1;
    std::string out_dir = ".";
    std::string topology_path = default_topology_path().string();
    std::string noise_path = default_noise_path().string();
    app.add_option("--seed", seed, "Master seed")->capture_default_str();
    app.add_option("--out-dir", out_dir, "Output directory")->capture_default_str();
    app.add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--topology", topology_path, "Topology JSON")->check(CLI::ExistingFile);
    app.add_option("--noise", noise_path, "Noise JSON")->check(CLI::ExistingFile);

    int n_min = 2;
    int n_max = 7;
    int n = 5;
    std::uint64_t shots = 8192;
    std::uint64_t trials = 10000;
    std::size_t configs = 50;
    std::size_t pool = 819200;
    double tau = 0.1;
    std::uint64_t samples = 100000;
    std::string mode = "exact";
    std::string algorithm = "period";
    std::string input;
    std::string period;
    std::string label = "input";
    std::vector<std::string> techniques = smoothing_techniques();
    std::vector<double> taus = reference_taus();

    auto* transpile = app.add_subcommand("transpile-report", "Minimum-CN configurations and compiled circuits");
    transpile->add_option("--n-min", n_min)->capture_default_str();
    transpile->add_option("--n-max", n_max)->capture_default_str();

    auto* measure = app.add_subcommand("measure", "Noisy sampling of the compiled circuit");
    measure->add_option("--n", n)->capture_default_str();
    measure->add_option("--shots", shots)->capture_default_str();

    auto* smooth = app.add_subcommand("smooth", "Smoothing techniques and their quality statistics");
    smooth->add_option("--n", n)->capture_default_str();
    smooth->add_option("--shots", shots, "Shots per configuration")->capture_default_str();
    smooth->add_option("--configs", configs, "Permutation configurations")->capture_default_str();
    smooth->add_option("--technique", techniques)
        ->delimiter(',')
        ->check(CLI::IsMember(smoothing_techniques()));

    auto* stats = app.add_subcommand("stats", "Quality statistics of a multiset CSV");
    stats->add_option("--input", input)->required()->check(CLI::ExistingFile);
    stats->add_option("--period", period, "Bit string of s, bit 0 first")->required();
    stats->add_option("--label", label)->capture_default_str();

    auto* crossover = app.add_subcommand("crossover", "Period versus Pooled LSN loop counts");
    crossover->add_option("--n-min", n_min)->capture_default_str();
    crossover->add_option("--n-max", n_max)->capture_default_str();
    crossover->add_option("--taus", taus, "One error rate per n")->delimiter(',');
    crossover->add_option("--trials", trials)->capture_default_str();
    crossover->add_option("--pool", pool)->capture_default_str();

    auto* reduction = app.add_subcommand("reduction-check", "Distribution checks of both reductions");
    reduction->add_option("--n", n)->capture_default_str();
    reduction->add_option("--tau", tau)->capture_default_str();
    reduction->add_option("--samples", samples)->capture_default_str();
    reduction->add_option("--mode", mode)->check(CLI::IsMember({"exact", "statistical"}))->capture_default_str();

    auto* solve = app.add_subcommand("solve", "Repeated solver runs");
    solve->add_option("--algorithm", algorithm)
        ->check(CLI::IsMember({"period", "pooled-lsn", "pooled-gauss"}))
        ->capture_default_str();
    solve->add_option("--n", n)->capture_default_str();
    solve->add_option("--tau", tau)->capture_default_str();
    solve->add_option("--trials", trials)->capture_default_str();
    solve->add_option("--pool", pool)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        RunContext ctx;
        ctx.seed = seed;
        ctx.workers = workers;
        ctx.out_dir = out_dir;
        ctx.topology = load_topology_json(topology_path);
        ctx.noise = load_noise_json(noise_path);

        if (*transpile) {
            for (const auto& r : cmd_transpile_report(ctx, n_min, n_max)) {
                std::cout << "n=" << r.n << " CN=" << r.norm.value() << " " << r.config.to_string()
                          << (r.equivalent ? "" : " NOT-EQUIVALENT") << '\n';
            }
        } else if (*measure) {
            const auto m = cmd_measure(ctx, n, shots);
            std::cout << "wrote " << m.total() << " outcomes\n";
        } else if (*smooth) {
            print_rows(cmd_smooth(ctx, n, shots, configs, techniques));
        } else if (*stats) {
            print_rows({cmd_stats(ctx, input, BitVec::parse(period), label)});
        } else if (*crossover) {
            const auto rows = cmd_crossover(ctx, n_min, n_max, taus, trials, pool);
            write_solver_csv(std::cout, rows);
        } else if (*reduction) {
            bool ok = true;
            for (const auto& v : cmd_reduction_check(ctx, n, tau, samples, mode)) {
                std::cout << v.direction << ' ' << v.metric << '=' << v.value << ' ' << (v.pass ? "PASS" : "FAIL")
                          << '\n';
                ok = ok && v.pass;
            }
            return ok ? 0 : 1;
        } else if (*solve) {
            write_solver_csv(std::cout, {cmd_solve(ctx, algorithm, n, tau, trials, pool)});
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
