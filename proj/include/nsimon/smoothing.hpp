#pragma once

#include <cstdint>
#include <vector>

#include "nsimon/multiset.hpp"
#include "nsimon/noise.hpp"
#include "nsimon/rng.hpp"
#include "nsimon/transpile.hpp"

namespace nsimon {

/// `count` random relabelings of a minimum-CN base configuration: a random
/// bit b exchanges the qubits of x_0 and x_1, and a random permutation pi of
/// {2..n-1} moves the pair (x_j, y_j) onto the qubits of (x_pi(j), y_pi(j)).
/// Draws are independent, so repeats are possible.
std::vector<Configuration> permutation_configurations(const Configuration& base, int n, std::size_t count,
                                                      Rng& rng);

/// Samples the compiled circuit of every configuration with shots_per_config
/// shots each (configuration k uses child seed k) and merges the outcomes,
/// which are already in logical order x_0..x_{n-1}. Throws RangeError when a
/// configuration compiles above the minimum CN.
MeasurementMultiset permutation_smooth(const SimonFunction& f, const TopologyGraph& g,
                                       const std::vector<Configuration>& configs, std::uint64_t shots_per_config,
                                       const NoiseParams& noise, std::uint64_t seed, int workers = 1);

struct DoubleFlipResult {
    MeasurementMultiset base;
    /// The X-flipped run, outcomes complemented back.
    MeasurementMultiset flipped;
    MeasurementMultiset merged;
};

/// Runs the compiled circuit and its final-X variant with `shots` each
/// (child seeds 0 and 1), complements the flipped outcomes and merges.
DoubleFlipResult double_flip(const SimonFunction& f, const TopologyGraph& g, const Configuration& cfg,
                             const NoiseParams& noise, std::uint64_t shots, std::uint64_t seed, int workers = 1);

/// m merged with {q + v : q in m}.
MeasurementMultiset hamming_smooth(const MeasurementMultiset& m, const BitVec& v);

/// 1^n, then 1^n with bit i cleared for i = n-1 down to 0.
std::vector<BitVec> hamming_vector_candidates(int n);

/// The first candidate orthogonal to s; one always exists.
BitVec hamming_vector_for(const BitVec& s);

}  // namespace nsimon
