#pragma once

#include <cstdint>

#include "nsimon/distribution.hpp"
#include "nsimon/gf2_matrix.hpp"
#include "nsimon/multiset.hpp"
#include "nsimon/rng.hpp"

namespace nsimon {

/// LSN_{n,tau}: samples are uniform on s-perp with probability 1 - tau and
/// uniform on its complement otherwise. 0 <= tau < 1/2, s != 0.
struct LsnParams {
    BitVec s;
    double tau = 0.0;

    LsnParams(BitVec period, double error_rate);
    int n() const { return s.size(); }
};

/// Exact sampler: a tau-coin, then a uniform combination of a basis of
/// s-perp, shifted by a fixed vector off s-perp when the coin says error.
class LsnSampler {
public:
    explicit LsnSampler(const LsnParams& params);

    const LsnParams& params() const { return params_; }
    BitVec operator()(Rng& rng) const;

private:
    LsnParams params_;
    std::vector<std::uint64_t> basis_;
    std::uint64_t off_;
};

/// (1 - tau) / 2^{n-1} on s-perp, tau / 2^{n-1} elsewhere.
Distribution model_distribution(const LsnParams& params);

/// Fraction of counted outcomes y with <y, s> = 1. Throws EmptyError for an
/// empty multiset.
double estimate_tau(const MeasurementMultiset& m, const BitVec& s);

/// Multiset of `count` samples drawn from the sampler.
MeasurementMultiset sample_multiset(const LsnSampler& sampler, std::uint64_t count, Rng& rng);

}  // namespace nsimon
