#include <algorithm>
#include <numeric>

#include "nsimon/smoothing.hpp"

namespace nsimon {

std::vector<Configuration> permutation_configurations(const Configuration& base, int n, std::size_t count,
                                                      Rng& rng) {
    if (base.wires() != 2 * n) throw DimensionError("configuration does not match n");
    std::vector<Configuration> out;
    out.reserve(count);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t k = 0; k < count; ++k) {
        std::vector<int> pi(static_cast<std::size_t>(std::max(0, n - 2)));
        std::iota(pi.begin(), pi.end(), 2);
        std::shuffle(pi.begin(), pi.end(), rng);
        const bool b = n >= 2 && coin(rng);

        Configuration cfg = base;
        auto at = [&](int wire) -> int& { return cfg.physical[static_cast<std::size_t>(wire)]; };
        auto from = [&](int wire) { return base.physical[static_cast<std::size_t>(wire)]; };
        if (b) {
            at(x_wire(0)) = from(x_wire(1));
            at(x_wire(1)) = from(x_wire(0));
        }
        for (int j = 2; j < n; ++j) {
            const int target = pi[static_cast<std::size_t>(j - 2)];
            at(x_wire(target)) = from(x_wire(j));
            at(y_wire(n, target)) = from(y_wire(n, j));
        }
        out.push_back(std::move(cfg));
    }
    return out;
}

MeasurementMultiset permutation_smooth(const SimonFunction& f, const TopologyGraph& g,
                                       const std::vector<Configuration>& configs, std::uint64_t shots_per_config,
                                       const NoiseParams& noise, std::uint64_t seed, int workers) {
    const Circuit logical = build_simon_circuit(f);
    const int minimum = circuit_norm(peephole_optimize(logical)).value();
    MeasurementMultiset out(f.n());
    for (std::size_t k = 0; k < configs.size(); ++k) {
        const Circuit compiled = compile(logical, g, configs[k]);
        if (circuit_norm(compiled).value() != minimum) {
            throw RangeError("configuration " + configs[k].to_string() + " does not attain the minimum CN");
        }
        out.merge(sample_noisy(compiled, noise, shots_per_config, derive_seed(seed, k), workers));
    }
    return out;
}

DoubleFlipResult double_flip(const SimonFunction& f, const TopologyGraph& g, const Configuration& cfg,
                             const NoiseParams& noise, std::uint64_t shots, std::uint64_t seed, int workers) {
    const Circuit compiled = compile(build_simon_circuit(f), g, cfg);
    DoubleFlipResult r;
    r.base = sample_noisy(compiled, noise, shots, derive_seed(seed, 0), workers);
    const auto raw = sample_noisy(with_final_flips(compiled), noise, shots, derive_seed(seed, 1), workers);
    MeasurementMultiset complemented(f.n());
    for (const auto& [y, c] : raw.counts()) complemented.add(y + BitVec::ones(f.n()), c);
    r.flipped = std::move(complemented);
    r.merged = r.base;
    r.merged.merge(r.flipped);
    return r;
}

MeasurementMultiset hamming_smooth(const MeasurementMultiset& m, const BitVec& v) {
    if (v.size() != m.n()) throw DimensionError("Hamming vector length differs from outcomes");
    MeasurementMultiset out = m;
    for (const auto& [y, c] : m.counts()) out.add(y + v, c);
    return out;
}

std::vector<BitVec> hamming_vector_candidates(int n) {
    if (n < 1) throw DimensionError("Hamming candidates need n >= 1");
    std::vector<BitVec> out{BitVec::ones(n)};
    for (int i = n - 1; i >= 0; --i) {
        BitVec v = BitVec::ones(n);
        v.set(i, false);
        out.push_back(v);
    }
    return out;
}

BitVec hamming_vector_for(const BitVec& s) {
    for (const auto& v : hamming_vector_candidates(s.size())) {
        if (!inner_product(v, s)) return v;
    }
    throw DegenerateError("no Hamming candidate is orthogonal to s");
}

}  // namespace nsimon
