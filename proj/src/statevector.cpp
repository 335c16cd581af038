#include <cmath>
#include <numbers>

#include "nsimon/statevector.hpp"

namespace nsimon {

StateVector::StateVector(int width) : width_(width) {
    if (width < 0 || width > kMaxQubits) {
        throw CapacityError("statevector width " + std::to_string(width) + " exceeds " +
                            std::to_string(kMaxQubits));
    }
    amp_.assign(std::size_t{1} << width, Amplitude{0.0, 0.0});
    amp_[0] = 1.0;
}

void StateVector::apply(const Gate& g) {
    switch (g.kind) {
        case GateKind::H: apply_h(g.target); break;
        case GateKind::X: apply_x(g.target); break;
        case GateKind::CNOT: apply_cnot(g.control, g.target); break;
    }
}

void StateVector::apply_h(int q) {
    const std::size_t bit = std::size_t{1} << q;
    const double r = std::numbers::sqrt2 / 2.0;
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        if (i & bit) continue;
        const Amplitude a0 = amp_[i];
        const Amplitude a1 = amp_[i | bit];
        amp_[i] = r * (a0 + a1);
        amp_[i | bit] = r * (a0 - a1);
    }
}

void StateVector::apply_x(int q) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        if (!(i & bit)) std::swap(amp_[i], amp_[i | bit]);
    }
}

void StateVector::apply_y(int q) {
    // Y = i X Z
    const std::size_t bit = std::size_t{1} << q;
    const Amplitude im{0.0, 1.0};
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        if (i & bit) continue;
        const Amplitude a0 = amp_[i];
        const Amplitude a1 = amp_[i | bit];
        amp_[i] = -im * a1;
        amp_[i | bit] = im * a0;
    }
}

void StateVector::apply_z(int q) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        if (i & bit) amp_[i] = -amp_[i];
    }
}

void StateVector::apply_cnot(int control, int target) {
    const std::size_t cb = std::size_t{1} << control;
    const std::size_t tb = std::size_t{1} << target;
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        if ((i & cb) && !(i & tb)) std::swap(amp_[i], amp_[i | tb]);
    }
}

double StateVector::norm_squared() const {
    double s = 0.0;
    for (const auto& a : amp_) s += std::norm(a);
    return s;
}

Distribution StateVector::marginal(const std::vector<int>& qubits) const {
    Distribution d(static_cast<int>(qubits.size()));
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        const double p = std::norm(amp_[i]);
        if (p == 0.0) continue;
        std::uint64_t outcome = 0;
        for (std::size_t j = 0; j < qubits.size(); ++j) {
            outcome |= static_cast<std::uint64_t>((i >> qubits[j]) & 1u) << j;
        }
        d[outcome] += p;
    }
    return d;
}

CompactCircuit compact(const Circuit& c) {
    const auto active = c.active_qubits();
    std::vector<int> new_index(static_cast<std::size_t>(c.width()), -1);
    for (std::size_t k = 0; k < active.size(); ++k) new_index[static_cast<std::size_t>(active[k])] = static_cast<int>(k);

    Circuit out(static_cast<int>(active.size()));
    for (const auto& g : c.gates()) {
        Gate h = g;
        h.target = new_index[static_cast<std::size_t>(g.target)];
        if (g.two_qubit()) h.control = new_index[static_cast<std::size_t>(g.control)];
        out.add(h);
    }
    std::vector<int> measured;
    for (int q : c.measured()) measured.push_back(new_index[static_cast<std::size_t>(q)]);
    out.measure(measured);
    return {std::move(out), active};
}

Distribution exact_output_distribution(const Circuit& c) {
    const auto small = compact(c);
    StateVector psi(small.circuit.width());
    for (const auto& g : small.circuit.gates()) psi.apply(g);
    return psi.marginal(small.circuit.measured());
}

bool circuits_equivalent(const Circuit& a, const Circuit& b, double tol) {
    if (a.measured_count() != b.measured_count()) {
        throw DimensionError("circuits measure different numbers of qubits");
    }
    const auto pa = exact_output_distribution(a);
    const auto pb = exact_output_distribution(b);
    for (std::size_t i = 0; i < pa.size(); ++i) {
        if (std::abs(pa[i] - pb[i]) > tol) return false;
    }
    return true;
}

}  // namespace nsimon
