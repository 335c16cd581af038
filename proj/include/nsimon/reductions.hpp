#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "nsimon/lsn.hpp"
#include "nsimon/rng.hpp"
#include "nsimon/stats.hpp"

namespace nsimon {

/// (a, <a, s> + eps).
struct LpnSample {
    BitVec a;
    bool b = false;

    friend bool operator==(const LpnSample&, const LpnSample&) = default;
};

/// LPN_{n,tau} shares the parameter space of LSN_{n,tau}.
using LpnParams = LsnParams;

/// Uniform a, label <a, s> flipped with probability tau.
class LpnSampler {
public:
    explicit LpnSampler(const LpnParams& params) : params_(params) {}

    const LpnParams& params() const { return params_; }
    LpnSample operator()(Rng& rng) const;

private:
    LpnParams params_;
};

/// LSN to LPN: (y + b z, b).
LpnSample lsn_sample_to_lpn(const BitVec& y, const BitVec& z, bool b);
/// Same with b drawn uniformly.
LpnSample lsn_sample_to_lpn(const BitVec& y, const BitVec& z, Rng& rng);
/// LPN to LSN: a + b z.
BitVec lpn_sample_to_lsn(const LpnSample& sample, const BitVec& z);

/// Exact distribution checks by enumeration over all inputs (n <= 12).
/// Each returns the largest absolute difference between the transformed
/// distribution and its target; the first three require <z, s> = 1.
///
/// LSN samples through lsn_sample_to_lpn versus uniform a labelled with
/// Bernoulli(tau) noise.
double lsn_to_lpn_exact_deviation(const LsnParams& params, const BitVec& z);
/// LPN samples through lpn_sample_to_lsn versus the LSN model.
double lpn_to_lsn_exact_deviation(const LpnParams& params, const BitVec& z);
/// LSN through both transforms with one z versus the LSN model.
double round_trip_exact_deviation(const LsnParams& params, const BitVec& z);
/// For <z, s> = 0: max |Pr[a, b] - Pr[a] Pr[b]| of the LSN-to-LPN output,
/// which is 0 because the label carries no information.
double degenerate_label_dependence(const LsnParams& params, const BitVec& z);

/// Chi-square fit of `samples` transformed draws, on cells (low min(n, 6)
/// bits of the output, error or orthogonality bit), against cell
/// probabilities derived from the target distribution. Requires <z, s> = 1.
ChiSquareResult lsn_to_lpn_chi_square(const LsnParams& params, const BitVec& z, std::uint64_t samples, Rng& rng);
ChiSquareResult lpn_to_lsn_chi_square(const LpnParams& params, const BitVec& z, std::uint64_t samples, Rng& rng);

using LsnOracle = std::function<BitVec(Rng&)>;
using LpnOracle = std::function<LpnSample(Rng&)>;
using LpnSolver = std::function<std::optional<BitVec>(std::span<const LpnSample>, Rng&)>;
using LsnSolver = std::function<std::optional<BitVec>(std::span<const BitVec>, Rng&)>;
using Verifier = std::function<bool(const BitVec&)>;

struct ReductionOutcome {
    std::optional<BitVec> s;
    int attempts = 0;
};

/// Solves LSN with an LPN solver. Each attempt draws a fresh uniform z and
/// m fresh samples, transforms them and runs the solver; a candidate is
/// returned only if it is nonzero and passes `verify`. Empty s after
/// `retries` failed attempts.
ReductionOutcome solve_lsn_via_lpn(int n, const LsnOracle& oracle, const LpnSolver& solver, const Verifier& verify,
                                   std::size_t m, int retries, Rng& rng);

/// Mirror image: solves LPN with an LSN solver.
ReductionOutcome solve_lpn_via_lsn(int n, const LpnOracle& oracle, const LsnSolver& solver, const Verifier& verify,
                                   std::size_t m, int retries, Rng& rng);

/// Accepts a nonzero candidate whose label disagreement rate on the held-out
/// samples is at most the midpoint between tau and 1/2.
Verifier majority_verifier(std::vector<LpnSample> held_out, double tau);

/// CSV with header `a,b`, a MSB first; '#' lines skipped on read.
void write_lpn_csv(std::ostream& out, std::span<const LpnSample> samples);
std::vector<LpnSample> read_lpn_csv(std::istream& in);

}  // namespace nsimon
