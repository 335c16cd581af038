#include <algorithm>
#include <set>

#include "nsimon/circuit.hpp"

namespace nsimon {

std::string to_string(const Gate& g) {
    switch (g.kind) {
        case GateKind::H: return "H(" + std::to_string(g.target) + ")";
        case GateKind::X: return "X(" + std::to_string(g.target) + ")";
        case GateKind::CNOT:
            return "CNOT(" + std::to_string(g.control) + "," + std::to_string(g.target) + ")";
    }
    return "?";
}

Circuit::Circuit(int width) : width_(width) {
    if (width < 0) throw DimensionError("negative circuit width");
}

Circuit::Circuit(int width, std::vector<Gate> gates, std::vector<int> measured) : Circuit(width) {
    for (const auto& g : gates) add(g);
    measure(std::move(measured));
}

void Circuit::check_gate(const Gate& g) const {
    if (g.target < 0 || g.target >= width_) throw DimensionError("gate target outside circuit: " + to_string(g));
    if (g.two_qubit()) {
        if (g.control < 0 || g.control >= width_) throw DimensionError("gate control outside circuit: " + to_string(g));
        if (g.control == g.target) throw DimensionError("CNOT control equals target: " + to_string(g));
    }
}

Circuit& Circuit::add(const Gate& g) {
    check_gate(g);
    gates_.push_back(g);
    return *this;
}

Circuit& Circuit::h(int q) { return add(Gate::h(q)); }
Circuit& Circuit::x(int q) { return add(Gate::x(q)); }
Circuit& Circuit::cnot(int control, int target) { return add(Gate::cnot(control, target)); }

Circuit& Circuit::measure(std::vector<int> qubits) {
    std::set<int> seen;
    for (int q : qubits) {
        if (q < 0 || q >= width_) throw DimensionError("measured qubit outside circuit");
        if (!seen.insert(q).second) throw DimensionError("qubit measured twice");
    }
    if (qubits.size() > 64) throw CapacityError("at most 64 measured qubits");
    measured_ = std::move(qubits);
    return *this;
}

bool Circuit::is_measured(int q) const {
    return std::find(measured_.begin(), measured_.end(), q) != measured_.end();
}

std::vector<int> Circuit::active_qubits() const {
    std::vector<bool> used(static_cast<std::size_t>(width_), false);
    for (const auto& g : gates_) {
        used[static_cast<std::size_t>(g.target)] = true;
        if (g.two_qubit()) used[static_cast<std::size_t>(g.control)] = true;
    }
    for (int q : measured_) used[static_cast<std::size_t>(q)] = true;
    std::vector<int> out;
    for (int q = 0; q < width_; ++q) {
        if (used[static_cast<std::size_t>(q)]) out.push_back(q);
    }
    return out;
}

Circuit build_simon_circuit(const SimonFunction& f) {
    const int n = f.n();
    Circuit c(2 * n);
    for (int i = 0; i < n; ++i) c.h(x_wire(i));
    for (int i = 0; i < n; ++i) c.cnot(x_wire(i), y_wire(n, i));
    for (int j = 0; j < n; ++j) {
        if (f.period().get(j)) c.cnot(x_wire(f.control_index()), y_wire(n, j));
    }
    for (int i = 0; i < n; ++i) c.h(x_wire(i));
    std::vector<int> measured;
    for (int i = 0; i < n; ++i) measured.push_back(x_wire(i));
    c.measure(measured);
    return c;
}

Circuit with_final_flips(const Circuit& c) {
    Circuit out = c;
    for (int q : c.measured()) out.x(q);
    return out;
}

}  // namespace nsimon
