#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <ostream>

#include "nsimon/reductions.hpp"

namespace nsimon {

namespace {

constexpr int kMaxExactBits = 12;

void check_dims(const BitVec& x, const BitVec& z) {
    if (x.size() != z.size()) throw DimensionError("sample and reduction vector lengths differ");
}

bool parity(std::uint64_t w) { return std::popcount(w) & 1; }

void check_exact(const LsnParams& params, const BitVec& z, bool want_one) {
    if (params.n() > kMaxExactBits) throw CapacityError("exact reduction checks support n <= 12");
    check_dims(params.s, z);
    if (inner_product(z, params.s) != want_one) {
        throw RangeError(want_one ? "exact check requires <z, s> = 1" : "degenerate check requires <z, s> = 0");
    }
}

// Pr[(a, b)] of LPN_{n,tau}, index 2a + b.
std::vector<double> lpn_target(const LpnParams& p) {
    const std::uint64_t size = std::uint64_t{1} << p.n();
    std::vector<double> t(2 * size);
    const double u = std::ldexp(1.0, -p.n());
    for (std::uint64_t a = 0; a < size; ++a) {
        for (int b = 0; b < 2; ++b) {
            const bool eps = parity(a & p.s.word()) != static_cast<bool>(b);
            t[2 * a + static_cast<std::uint64_t>(b)] = u * (eps ? p.tau : 1.0 - p.tau);
        }
    }
    return t;
}

// Pr[(a, b)] after lsn_sample_to_lpn, index 2a + b.
std::vector<double> lsn_to_lpn_output(const LsnParams& p, const BitVec& z) {
    const Distribution lsn = model_distribution(p);
    std::vector<double> out(2 * lsn.size(), 0.0);
    for (std::uint64_t y = 0; y < lsn.size(); ++y) {
        for (int b = 0; b < 2; ++b) {
            const LpnSample s = lsn_sample_to_lpn(BitVec(p.n(), y), z, b == 1);
            out[2 * s.a.word() + (s.b ? 1 : 0)] += lsn[y] / 2.0;
        }
    }
    return out;
}

double max_abs_diff(const std::vector<double>& x, const std::vector<double>& y) {
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
    return d;
}

int cell_bits(int n) { return std::min(n, 6); }

}  // namespace

LpnSample LpnSampler::operator()(Rng& rng) const {
    const int n = params_.n();
    const BitVec a(n, rng() & low_mask(n));
    std::bernoulli_distribution noise(params_.tau);
    const bool eps = params_.tau > 0.0 && noise(rng);
    return {a, inner_product(a, params_.s) != eps};
}

LpnSample lsn_sample_to_lpn(const BitVec& y, const BitVec& z, bool b) {
    check_dims(y, z);
    return {b ? y + z : y, b};
}

LpnSample lsn_sample_to_lpn(const BitVec& y, const BitVec& z, Rng& rng) {
    std::bernoulli_distribution coin(0.5);
    return lsn_sample_to_lpn(y, z, coin(rng));
}

BitVec lpn_sample_to_lsn(const LpnSample& sample, const BitVec& z) {
    check_dims(sample.a, z);
    return sample.b ? sample.a + z : sample.a;
}

double lsn_to_lpn_exact_deviation(const LsnParams& params, const BitVec& z) {
    check_exact(params, z, true);
    return max_abs_diff(lsn_to_lpn_output(params, z), lpn_target(params));
}

double lpn_to_lsn_exact_deviation(const LpnParams& params, const BitVec& z) {
    check_exact(params, z, true);
    const auto lpn = lpn_target(params);
    const Distribution target = model_distribution(params);
    std::vector<double> out(target.size(), 0.0);
    for (std::uint64_t a = 0; a < target.size(); ++a) {
        for (int b = 0; b < 2; ++b) {
            const BitVec y = lpn_sample_to_lsn({BitVec(params.n(), a), b == 1}, z);
            out[y.word()] += lpn[2 * a + static_cast<std::uint64_t>(b)];
        }
    }
    return max_abs_diff(out, target.probabilities());
}

double round_trip_exact_deviation(const LsnParams& params, const BitVec& z) {
    check_exact(params, z, true);
    const auto mid = lsn_to_lpn_output(params, z);
    const Distribution target = model_distribution(params);
    std::vector<double> out(target.size(), 0.0);
    for (std::uint64_t a = 0; a < target.size(); ++a) {
        for (int b = 0; b < 2; ++b) {
            const BitVec y = lpn_sample_to_lsn({BitVec(params.n(), a), b == 1}, z);
            out[y.word()] += mid[2 * a + static_cast<std::uint64_t>(b)];
        }
    }
    return max_abs_diff(out, target.probabilities());
}

double degenerate_label_dependence(const LsnParams& params, const BitVec& z) {
    check_exact(params, z, false);
    const auto joint = lsn_to_lpn_output(params, z);
    const std::size_t size = joint.size() / 2;
    std::vector<double> pa(size, 0.0);
    double pb[2] = {0.0, 0.0};
    for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            pa[a] += joint[2 * a + b];
            pb[b] += joint[2 * a + b];
        }
    }
    double d = 0.0;
    for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = 0; b < 2; ++b) d = std::max(d, std::abs(joint[2 * a + b] - pa[a] * pb[b]));
    }
    return d;
}

ChiSquareResult lsn_to_lpn_chi_square(const LsnParams& params, const BitVec& z, std::uint64_t samples, Rng& rng) {
    check_dims(params.s, z);
    if (!inner_product(z, params.s)) throw RangeError("chi-square check requires <z, s> = 1");
    const int k = cell_bits(params.n());
    const std::uint64_t mask = low_mask(k);
    std::vector<std::uint64_t> observed(std::size_t{2} << k, 0);
    const LsnSampler sampler(params);
    for (std::uint64_t i = 0; i < samples; ++i) {
        const LpnSample s = lsn_sample_to_lpn(sampler(rng), z, rng);
        const bool eps = inner_product(s.a, params.s) != s.b;
        ++observed[2 * (s.a.word() & mask) + (eps ? 1 : 0)];
    }
    // a uniform, eps ~ Bernoulli(tau) independent of a.
    std::vector<double> expected(observed.size());
    const double u = std::ldexp(1.0, -k);
    for (std::size_t c = 0; c < expected.size(); ++c) expected[c] = u * ((c & 1u) ? params.tau : 1.0 - params.tau);
    return chi_square_test(observed, expected);
}

ChiSquareResult lpn_to_lsn_chi_square(const LpnParams& params, const BitVec& z, std::uint64_t samples, Rng& rng) {
    check_dims(params.s, z);
    if (!inner_product(z, params.s)) throw RangeError("chi-square check requires <z, s> = 1");
    const int n = params.n();
    const int k = cell_bits(n);
    const std::uint64_t mask = low_mask(k);
    std::vector<std::uint64_t> observed(std::size_t{2} << k, 0);
    const LpnSampler sampler(params);
    for (std::uint64_t i = 0; i < samples; ++i) {
        const BitVec y = lpn_sample_to_lsn(sampler(rng), z);
        ++observed[2 * (y.word() & mask) + (inner_product(y, params.s) ? 1 : 0)];
    }
    // Number of y with low bits l and <y, s> = o, times the model level of o.
    const std::uint64_t s_lo = params.s.word() & mask;
    const std::uint64_t s_hi = params.s.word() >> k;
    std::vector<double> expected(observed.size());
    for (std::uint64_t l = 0; l <= mask; ++l) {
        for (int o = 0; o < 2; ++o) {
            double count = 0.0;
            if (s_hi != 0) {
                count = std::ldexp(1.0, n - k - 1);
            } else if (parity(l & s_lo) == static_cast<bool>(o)) {
                count = std::ldexp(1.0, n - k);
            }
            const double level = (o ? params.tau : 1.0 - params.tau) * std::ldexp(1.0, -(n - 1));
            expected[2 * l + static_cast<std::uint64_t>(o)] = count * level;
        }
    }
    return chi_square_test(observed, expected);
}

ReductionOutcome solve_lsn_via_lpn(int n, const LsnOracle& oracle, const LpnSolver& solver, const Verifier& verify,
                                   std::size_t m, int retries, Rng& rng) {
    ReductionOutcome out;
    std::vector<LpnSample> samples(m);
    for (out.attempts = 1; out.attempts <= retries; ++out.attempts) {
        const BitVec z(n, rng() & low_mask(n));
        for (auto& s : samples) s = lsn_sample_to_lpn(oracle(rng), z, rng);
        const auto candidate = solver(samples, rng);
        if (candidate && !candidate->is_zero() && verify(*candidate)) {
            out.s = candidate;
            return out;
        }
    }
    out.attempts = retries;
    return out;
}

ReductionOutcome solve_lpn_via_lsn(int n, const LpnOracle& oracle, const LsnSolver& solver, const Verifier& verify,
                                   std::size_t m, int retries, Rng& rng) {
    ReductionOutcome out;
    std::vector<BitVec> samples(m);
    for (out.attempts = 1; out.attempts <= retries; ++out.attempts) {
        const BitVec z(n, rng() & low_mask(n));
        for (auto& y : samples) y = lpn_sample_to_lsn(oracle(rng), z);
        const auto candidate = solver(samples, rng);
        if (candidate && !candidate->is_zero() && verify(*candidate)) {
            out.s = candidate;
            return out;
        }
    }
    out.attempts = retries;
    return out;
}

Verifier majority_verifier(std::vector<LpnSample> held_out, double tau) {
    if (held_out.empty()) throw EmptyError("majority verifier needs held-out samples");
    const double threshold = (tau + 0.5) / 2.0;
    return [samples = std::move(held_out), threshold](const BitVec& candidate) {
        if (candidate.is_zero()) return false;
        std::size_t wrong = 0;
        for (const auto& s : samples) wrong += inner_product(s.a, candidate) != s.b;
        return static_cast<double>(wrong) <= threshold * static_cast<double>(samples.size());
    };
}

void write_lpn_csv(std::ostream& out, std::span<const LpnSample> samples) {
    out << "a,b\n";
    for (const auto& s : samples) out << s.a.to_string() << ',' << (s.b ? 1 : 0) << '\n';
}

std::vector<LpnSample> read_lpn_csv(std::istream& in) {
    std::vector<LpnSample> out;
    std::string line;
    bool header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (!header) {
            if (line != "a,b") throw ParseError("expected header 'a,b'");
            header = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw ParseError("malformed LPN row: " + line);
        const std::string label = line.substr(comma + 1);
        if (label != "0" && label != "1") throw ParseError("LPN label must be 0 or 1: " + line);
        out.push_back({BitVec::parse(line.substr(0, comma)), label == "1"});
    }
    if (!header) throw ParseError("missing LPN header");
    return out;
}

}  // namespace nsimon
