#include <bit>
#include <cmath>

#include "nsimon/lsn.hpp"

namespace nsimon {

LsnParams::LsnParams(BitVec period, double error_rate) : s(std::move(period)), tau(error_rate) {
    if (s.is_zero()) throw DegenerateError("LSN period must be nonzero");
    if (!(tau >= 0.0 && tau < 0.5)) throw RangeError("LSN error rate must lie in [0, 1/2)");
}

LsnSampler::LsnSampler(const LsnParams& params) : params_(params) {
    const Gf2Matrix basis = orthogonal_basis(params.s);
    for (const auto& v : basis.rows()) basis_.push_back(v.word());
    off_ = std::uint64_t{1} << std::countr_zero(params.s.word());
}

BitVec LsnSampler::operator()(Rng& rng) const {
    std::bernoulli_distribution error(params_.tau);
    const bool wrong = params_.tau > 0.0 && error(rng);
    std::uint64_t pick = rng();
    std::uint64_t y = wrong ? off_ : 0;
    for (std::uint64_t b : basis_) {
        if (pick & 1u) y ^= b;
        pick >>= 1;
    }
    return BitVec(params_.n(), y);
}

Distribution model_distribution(const LsnParams& params) {
    const int n = params.n();
    Distribution d(n);
    const double level = std::ldexp(1.0, -(n - 1));
    for (std::uint64_t y = 0; y < d.size(); ++y) {
        const bool off = std::popcount(y & params.s.word()) & 1;
        d[y] = (off ? params.tau : 1.0 - params.tau) * level;
    }
    return d;
}

double estimate_tau(const MeasurementMultiset& m, const BitVec& s) {
    if (m.empty()) throw EmptyError("cannot estimate tau from an empty multiset");
    if (m.n() != s.size()) throw DimensionError("period length differs from outcomes");
    std::uint64_t off = 0;
    for (const auto& [y, c] : m.counts()) {
        if (inner_product(y, s)) off += c;
    }
    return static_cast<double>(off) / static_cast<double>(m.total());
}

MeasurementMultiset sample_multiset(const LsnSampler& sampler, std::uint64_t count, Rng& rng) {
    MeasurementMultiset m(sampler.params().n());
    for (std::uint64_t i = 0; i < count; ++i) m.add(sampler(rng));
    return m;
}

}  // namespace nsimon
