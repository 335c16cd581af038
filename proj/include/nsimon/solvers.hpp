#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "nsimon/reductions.hpp"
#include "nsimon/rng.hpp"
#include "nsimon/simon_function.hpp"

namespace nsimon {

struct CostReport {
    std::uint64_t loops = 0;    // repeat-loop bodies executed
    std::uint64_t queries = 0;  // oracle calls
};

struct SolveResult {
    std::optional<BitVec> s;
    CostReport cost;
};

/// Classical period finding that keeps every excluded distance. P holds the
/// queried points, starting with 0; D holds 0 and all pairwise distances of
/// P. Each step queries an x maximizing |D| - |{p in P : x + p in D}|, the
/// number of distances the query would newly test, smallest x on ties. It
/// stops on a collision or when only one candidate is left (|D| = 2^n - 1).
class PeriodFinder {
public:
    enum class Strategy { Incremental, FullScan };

    static constexpr int kMaxBits = 16;

    explicit PeriodFinder(const SimonFunction& f, Strategy strategy = Strategy::Incremental);

    bool done() const { return result_.has_value(); }
    /// One repeat-loop iteration; returns the queried point.
    BitVec step();
    /// Runs to completion.
    SolveResult run();

    const std::optional<BitVec>& result() const { return result_; }
    const std::vector<BitVec>& queried() const { return points_; }
    std::vector<BitVec> distances() const;
    bool excluded(std::uint64_t d) const { return in_d_[d]; }
    CostReport cost() const { return cost_; }

private:
    std::uint64_t select() const;
    void move_count(std::uint64_t x);
    void add_distance(std::uint64_t d);
    void finish_if_exhausted();

    const SimonFunction& f_;
    Strategy strategy_;
    int n_;
    std::vector<BitVec> points_;
    std::vector<bool> in_p_;
    std::vector<bool> in_d_;
    std::vector<std::uint64_t> d_list_;
    // cnt_[x] = |{p in P : x + p in D}|; the score of x is |D| - cnt_[x].
    std::vector<std::uint32_t> cnt_;
    // buckets_[c] = {x : cnt_[x] = c}, for the incremental argmax.
    std::vector<std::set<std::uint64_t>> buckets_;
    std::unordered_map<std::uint64_t, std::uint64_t> image_;
    std::optional<BitVec> result_;
    CostReport cost_;
};

/// Runs PeriodFinder on f. The algorithm is deterministic given f; trials
/// randomize over s.
SolveResult classical_period(const SimonFunction& f);

/// Pooled LSN: each loop draws n-1 distinct pool samples uniformly; a
/// dependent draw fails the loop, otherwise the unique nonzero vector
/// orthogonal to the draw is the candidate, returned once `verify` accepts
/// it. Empty s after max_loops loops. Requires |pool| >= n - 1.
SolveResult pooled_lsn(int n, std::span<const BitVec> pool, const Verifier& verify, Rng& rng,
                       std::uint64_t max_loops = 1u << 24);
/// Verification by f(candidate) == f(0).
SolveResult pooled_lsn(const SimonFunction& f, std::span<const BitVec> pool, Rng& rng,
                       std::uint64_t max_loops = 1u << 24);

/// Pooled Gauss for LPN: each iteration draws n distinct pool samples; a
/// singular draw fails the iteration, otherwise the solution of the linear
/// system is the candidate. Requires |pool| >= n.
SolveResult pooled_gauss_lpn(int n, std::span<const LpnSample> pool, const Verifier& verify, Rng& rng,
                             std::uint64_t max_iterations = 1u << 24);

/// prod_{j=1}^{k} (1 - 2^{-j}): probability that k uniform vectors of F_2^k
/// are independent.
double independence_probability(int k);
/// 1 / ((1 - tau)^{n-1} * independence_probability(n - 1)).
double expected_pooled_lsn_loops(int n, double tau);
/// (1 - tau)^n * independence_probability(n).
double pooled_gauss_success_probability(int n, double tau);

/// log2(1 / (1 - tau)). Throws RangeError outside [0, 1/2).
double runtime_exponent_pooled(double tau);
/// 1 - 1 / (1 + log2(1 / (1 - tau))). Throws RangeError outside [0, 1/2).
double runtime_exponent_wellpooled(double tau);

struct SolverRow {
    std::string algorithm;
    int n = 0;
    double tau = 0.0;
    double mean_log2_loops = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

/// CSV with header `algorithm,n,tau,mean_log2_loops,trials,seed`.
void write_solver_csv(std::ostream& out, const std::vector<SolverRow>& rows);

}  // namespace nsimon
