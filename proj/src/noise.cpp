#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "nsimon/noise.hpp"
#include "nsimon/rng.hpp"
#include "nsimon/statevector.hpp"

namespace nsimon {

NoiseParams NoiseParams::uniform(double eps1, double p01, double p10) {
    NoiseParams p;
    p.eps1 = eps1;
    p.eps2 = 10.0 * eps1;
    p.default_p01 = p01;
    p.default_p10 = p10;
    return p;
}

double NoiseParams::readout_01(int q) const {
    return static_cast<std::size_t>(q) < p01.size() ? p01[static_cast<std::size_t>(q)] : default_p01;
}

double NoiseParams::readout_10(int q) const {
    return static_cast<std::size_t>(q) < p10.size() ? p10[static_cast<std::size_t>(q)] : default_p10;
}

bool NoiseParams::is_noiseless() const {
    auto zero = [](const std::vector<double>& v) {
        return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
    };
    return eps1 == 0.0 && eps2 == 0.0 && default_p01 == 0.0 && default_p10 == 0.0 &&
           readout_crosstalk == 0.0 && zero(p01) && zero(p10);
}

void NoiseParams::validate() const {
    auto check = [](double x, const char* what) {
        if (!(x >= 0.0 && x <= 1.0)) throw RangeError(std::string(what) + " outside [0, 1]");
    };
    check(eps1, "eps1");
    check(eps2, "eps2");
    check(default_p01, "p01");
    check(default_p10, "p10");
    check(readout_crosstalk, "readout_crosstalk");
    for (double x : p01) check(x, "p01");
    for (double x : p10) check(x, "p10");
}

NoiseParams parse_noise_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text, nullptr, true, true);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("noise json: ") + e.what());
    }
    NoiseParams p;
    try {
        p.eps1 = j.value("eps1", 0.0);
        p.eps2 = j.contains("eps2") ? j.at("eps2").get<double>() : 10.0 * p.eps1;
        p.readout_crosstalk = j.value("readout_crosstalk", 0.0);
        if (j.contains("readout")) {
            const auto& r = j.at("readout");
            p.default_p01 = r.value("p01", 0.0);
            p.default_p10 = r.value("p10", 0.0);
        }
        if (j.contains("per_qubit")) {
            for (const auto& e : j.at("per_qubit")) {
                const auto q = e.at("qubit").get<std::size_t>();
                if (q >= p.p01.size()) {
                    p.p01.resize(q + 1, p.default_p01);
                    p.p10.resize(q + 1, p.default_p10);
                }
                p.p01[q] = e.value("p01", p.default_p01);
                p.p10[q] = e.value("p10", p.default_p10);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("noise json: ") + e.what());
    }
    p.validate();
    return p;
}

NoiseParams load_noise_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open noise file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_noise_json(ss.str());
}

std::string noise_to_json(const NoiseParams& p) {
    nlohmann::json j;
    j["eps1"] = p.eps1;
    j["eps2"] = p.eps2;
    j["readout"] = {{"p01", p.default_p01}, {"p10", p.default_p10}};
    j["readout_crosstalk"] = p.readout_crosstalk;
    nlohmann::json per = nlohmann::json::array();
    for (std::size_t q = 0; q < std::max(p.p01.size(), p.p10.size()); ++q) {
        per.push_back({{"qubit", q},
                       {"p01", p.readout_01(static_cast<int>(q))},
                       {"p10", p.readout_10(static_cast<int>(q))}});
    }
    j["per_qubit"] = per;
    return j.dump(2);
}

namespace {

struct Readout {
    std::vector<double> p01;
    std::vector<double> p10;

    Readout(const Circuit& c, const NoiseParams& noise) {
        const double extra = noise.readout_crosstalk * static_cast<double>(std::max(0, c.measured_count() - 1));
        for (int q : c.measured()) {
            p01.push_back(std::min(1.0, noise.readout_01(q) + extra));
            p10.push_back(std::min(1.0, noise.readout_10(q) + extra));
        }
    }

    std::uint64_t apply(std::uint64_t outcome, Rng& rng) const {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (std::size_t j = 0; j < p01.size(); ++j) {
            const bool one = (outcome >> j) & 1u;
            if (u(rng) < (one ? p10[j] : p01[j])) outcome ^= std::uint64_t{1} << j;
        }
        return outcome;
    }
};

// X and Z masks of a Pauli operator, phase dropped.
struct PauliFrame {
    std::uint64_t x = 0;
    std::uint64_t z = 0;

    void conjugate(const Gate& g) {
        switch (g.kind) {
            case GateKind::H: {
                const std::uint64_t b = std::uint64_t{1} << g.target;
                const std::uint64_t xb = x & b;
                const std::uint64_t zb = z & b;
                x = (x & ~b) | zb;
                z = (z & ~b) | xb;
                break;
            }
            case GateKind::X: break;
            case GateKind::CNOT: {
                const std::uint64_t cb = std::uint64_t{1} << g.control;
                const std::uint64_t tb = std::uint64_t{1} << g.target;
                if (x & cb) x ^= tb;
                if (z & tb) z ^= cb;
                break;
            }
        }
    }

    void inject(int q, unsigned pauli) {
        const std::uint64_t b = std::uint64_t{1} << q;
        if (pauli & 1u) x ^= b;
        if (pauli & 2u) z ^= b;
    }
};

MeasurementMultiset sample_worker(const Circuit& c, const Distribution& ideal, const NoiseParams& noise,
                                  const Readout& readout, std::uint64_t shots, Rng rng) {
    const int m = c.measured_count();
    MeasurementMultiset out(m);
    if (shots == 0) return out;
    std::discrete_distribution<std::uint64_t> pick(ideal.probabilities().begin(),
                                                   ideal.probabilities().end());
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<unsigned> pauli1(0, 3);
    std::uniform_int_distribution<unsigned> pauli2(0, 15);
    const bool gate_noise = noise.eps1 > 0.0 || noise.eps2 > 0.0;

    std::map<std::uint64_t, std::uint64_t> tally;
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        std::uint64_t outcome = pick(rng);
        if (gate_noise) {
            PauliFrame frame;
            for (const auto& g : c.gates()) {
                frame.conjugate(g);
                if (g.two_qubit()) {
                    if (u(rng) < noise.eps2) {
                        const unsigned r = pauli2(rng);
                        frame.inject(g.control, r & 3u);
                        frame.inject(g.target, r >> 2);
                    }
                } else if (u(rng) < noise.eps1) {
                    frame.inject(g.target, pauli1(rng));
                }
            }
            for (int j = 0; j < m; ++j) {
                if ((frame.x >> c.measured()[static_cast<std::size_t>(j)]) & 1u) outcome ^= std::uint64_t{1} << j;
            }
        }
        ++tally[readout.apply(outcome, rng)];
    }
    for (const auto& [y, k] : tally) out.add(BitVec(m, y), k);
    return out;
}

}  // namespace

MeasurementMultiset sample_noisy(const Circuit& c, const NoiseParams& noise, std::uint64_t shots,
                                 std::uint64_t seed, int workers) {
    if (shots == 0) throw RangeError("shots must be at least 1");
    if (workers < 1) throw RangeError("workers must be at least 1");
    noise.validate();
    const Distribution ideal = exact_output_distribution(c);
    const Readout readout(c, noise);

    const auto w = static_cast<std::uint64_t>(workers);
    std::vector<MeasurementMultiset> parts(w);
    std::vector<std::thread> threads;
    for (std::uint64_t k = 0; k < w; ++k) {
        const std::uint64_t share = shots / w + (k < shots % w ? 1 : 0);
        auto job = [&, k, share] { parts[k] = sample_worker(c, ideal, noise, readout, share, make_stream(seed, k)); };
        if (w == 1) {
            job();
        } else {
            threads.emplace_back(job);
        }
    }
    for (auto& t : threads) t.join();

    MeasurementMultiset out(c.measured_count());
    for (const auto& p : parts) out.merge(p);
    return out;
}

MeasurementMultiset sample_noisy_trajectories(const Circuit& c, const NoiseParams& noise,
                                              std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) throw RangeError("shots must be at least 1");
    noise.validate();
    const auto small = compact(c);
    const Readout readout(c, noise);
    Rng rng = make_stream(seed, 0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<unsigned> pauli1(0, 3);
    std::uniform_int_distribution<unsigned> pauli2(0, 15);

    auto inject = [](StateVector& psi, int q, unsigned r) {
        switch (r) {
            case 1: psi.apply_x(q); break;
            case 2: psi.apply_z(q); break;
            case 3: psi.apply_y(q); break;
            default: break;
        }
    };

    const int m = c.measured_count();
    MeasurementMultiset out(m);
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        StateVector psi(small.circuit.width());
        for (const auto& g : small.circuit.gates()) {
            psi.apply(g);
            if (g.two_qubit()) {
                if (u(rng) < noise.eps2) {
                    const unsigned r = pauli2(rng);
                    inject(psi, g.control, r & 3u);
                    inject(psi, g.target, r >> 2);
                }
            } else if (u(rng) < noise.eps1) {
                inject(psi, g.target, pauli1(rng));
            }
        }
        const auto dist = psi.marginal(small.circuit.measured());
        std::discrete_distribution<std::uint64_t> pick(dist.probabilities().begin(), dist.probabilities().end());
        out.add(BitVec(m, readout.apply(pick(rng), rng)));
    }
    return out;
}

}  // namespace nsimon
