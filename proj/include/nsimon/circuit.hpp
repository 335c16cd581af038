#pragma once

#include <compare>
#include <string>
#include <vector>

#include "nsimon/simon_function.hpp"

namespace nsimon {

enum class GateKind { H, X, CNOT };

struct Gate {
    GateKind kind = GateKind::H;
    int target = 0;
    int control = -1;  // CNOT only

    static Gate h(int q) { return {GateKind::H, q, -1}; }
    static Gate x(int q) { return {GateKind::X, q, -1}; }
    static Gate cnot(int c, int t) { return {GateKind::CNOT, t, c}; }

    bool two_qubit() const { return kind == GateKind::CNOT; }
    bool acts_on(int q) const { return target == q || (two_qubit() && control == q); }

    friend bool operator==(const Gate&, const Gate&) = default;
};

std::string to_string(const Gate& g);

/// Ordered gate list on `width` qubits, all starting in |0>, plus the ordered
/// list of qubits read out at the end. Outcome coordinate j is the value of
/// qubit measured[j].
class Circuit {
public:
    explicit Circuit(int width = 0);
    Circuit(int width, std::vector<Gate> gates, std::vector<int> measured);

    int width() const { return width_; }
    const std::vector<Gate>& gates() const { return gates_; }
    const std::vector<int>& measured() const { return measured_; }
    int measured_count() const { return static_cast<int>(measured_.size()); }

    Circuit& h(int q);
    Circuit& x(int q);
    Circuit& cnot(int control, int target);
    Circuit& add(const Gate& g);
    Circuit& measure(std::vector<int> qubits);

    bool is_measured(int q) const;
    /// Qubits touched by a gate or measured, ascending.
    std::vector<int> active_qubits() const;

    friend bool operator==(const Circuit&, const Circuit&) = default;

private:
    void check_gate(const Gate& g) const;

    int width_;
    std::vector<Gate> gates_;
    std::vector<int> measured_;
};

/// Wire labels of the logical Simon circuit: x_i is qubit i, y_i is qubit n+i.
inline int x_wire(int i) { return i; }
inline int y_wire(int n, int i) { return n + i; }

/// Q^SIMON for f_s: H on the first n qubits, n copy CNOTs x_j -> y_j, one
/// CNOT x_i -> y_j per 1-coordinate j of s, H on the first n qubits, and
/// measurement of x_0..x_{n-1}.
Circuit build_simon_circuit(const SimonFunction& f);

/// Appends X on every measured qubit (the circuit half of Double-Flip).
Circuit with_final_flips(const Circuit& c);

}  // namespace nsimon
