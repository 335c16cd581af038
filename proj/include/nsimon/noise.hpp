#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "nsimon/circuit.hpp"
#include "nsimon/multiset.hpp"

namespace nsimon {

/// Synthetic hardware model: depolarizing gate noise plus asymmetric,
/// per-qubit readout flips.
///
/// Readout on qubit q flips 0 to 1 with p01(q) and 1 to 0 with p10(q), each
/// raised by readout_crosstalk for every other qubit measured in the same
/// shot (clamped to 1).
struct NoiseParams {
    double eps1 = 0.0;
    double eps2 = 0.0;
    double default_p01 = 0.0;
    double default_p10 = 0.0;
    double readout_crosstalk = 0.0;
    std::vector<double> p01;  // indexed by qubit; missing entries use the default
    std::vector<double> p10;

    static NoiseParams noiseless() { return {}; }
    /// eps2 = 10 * eps1, uniform readout.
    static NoiseParams uniform(double eps1, double p01, double p10);

    double readout_01(int q) const;
    double readout_10(int q) const;
    bool is_noiseless() const;
    /// Throws RangeError unless every probability lies in [0, 1].
    void validate() const;
};

NoiseParams parse_noise_json(const std::string& text);
NoiseParams load_noise_json(const std::filesystem::path& path);
std::string noise_to_json(const NoiseParams& p);

/// Monte-Carlo sampling of `shots` noisy runs. Each gate is followed, with
/// probability eps1 or eps2, by a uniformly random Pauli on its qubits (the
/// identity included), then measured bits pass through the readout channel.
///
/// Pauli noise on an H/X/CNOT circuit is tracked as a Pauli frame pushed to
/// the end of the circuit, which is exact: the outcome is the ideal sample
/// XOR the frame's X part on the measured qubits.
///
/// Worker w draws shots from the stream seeded by (seed, w); shots are split
/// evenly with the remainder going to the lowest workers. workers = 1 is the
/// canonical output.
MeasurementMultiset sample_noisy(const Circuit& c, const NoiseParams& noise, std::uint64_t shots,
                                 std::uint64_t seed, int workers = 1);

/// Reference sampler that runs one statevector trajectory per shot. Same
/// distribution as sample_noisy; used to cross-check it.
MeasurementMultiset sample_noisy_trajectories(const Circuit& c, const NoiseParams& noise,
                                              std::uint64_t shots, std::uint64_t seed);

}  // namespace nsimon
