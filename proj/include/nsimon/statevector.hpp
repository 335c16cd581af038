#pragma once

#include <complex>
#include <vector>

#include "nsimon/circuit.hpp"
#include "nsimon/distribution.hpp"

namespace nsimon {

using Amplitude = std::complex<double>;

/// Dense 2^width amplitude array; basis index bit k is qubit k.
class StateVector {
public:
    static constexpr int kMaxQubits = 28;

    explicit StateVector(int width);

    int width() const { return width_; }
    const std::vector<Amplitude>& amplitudes() const { return amp_; }
    std::vector<Amplitude>& amplitudes() { return amp_; }

    void apply(const Gate& g);
    void apply_h(int q);
    void apply_x(int q);
    void apply_y(int q);
    void apply_z(int q);
    void apply_cnot(int control, int target);

    double norm_squared() const;
    /// Born-rule marginal over `qubits`; outcome bit j is qubits[j].
    Distribution marginal(const std::vector<int>& qubits) const;

private:
    int width_;
    std::vector<Amplitude> amp_;
};

/// Restriction of a circuit to its active qubits, with the original index of
/// each kept qubit. Idle unmeasured qubits never influence the outcome.
struct CompactCircuit {
    Circuit circuit;
    std::vector<int> original_index;
};

CompactCircuit compact(const Circuit& c);

/// Exact distribution of the measured bits. Throws CapacityError when the
/// active part of the circuit is wider than StateVector::kMaxQubits.
Distribution exact_output_distribution(const Circuit& c);

/// True iff both exact output distributions agree within tol per outcome.
/// Throws DimensionError when the measured arities differ.
bool circuits_equivalent(const Circuit& a, const Circuit& b, double tol = 1e-9);

}  // namespace nsimon
