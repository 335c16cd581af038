#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "nsimon/circuit.hpp"
#include "nsimon/noise.hpp"
#include "nsimon/simon_function.hpp"
#include "nsimon/topology.hpp"

namespace nsimon {

/// CN(Q) = g1 + 10 * g2.
struct CircuitNorm {
    int g1 = 0;
    int g2 = 0;

    int value() const { return g1 + 10 * g2; }
    friend bool operator==(const CircuitNorm&, const CircuitNorm&) = default;
};

CircuitNorm circuit_norm(const Circuit& c);

/// Placement of logical wires on physical qubits: physical[w] hosts logical
/// wire w. For Simon circuits wire i is x_i and wire n+i is y_i.
struct Configuration {
    std::vector<int> physical;

    int wires() const { return static_cast<int>(physical.size()); }
    /// Throws DimensionError unless injective and inside g.
    void validate(const TopologyGraph& g) const;
    /// "q:label" pairs in ascending physical order, labels x_i / y_i.
    std::string to_string() const;

    friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

/// Starting layout x_0..x_{n-1}, y_0..y_{n-1} on qubits 0..2n-1.
Configuration naive_configuration(int n);

/// Places logical wires by cfg and makes every CNOT act on adjacent qubits.
/// A non-adjacent CNOT moves its target along the shortest path towards
/// the control, one SWAP (three alternating CNOTs) per step; the new layout
/// persists for later gates. The result has the device's width and measures
/// the final positions of the logical measured wires, in logical order.
/// Throws RoutingError when the two qubits are disconnected.
Circuit route(const Circuit& c, const TopologyGraph& g, const Configuration& cfg);

/// Rewrites to a fixed point with passes in the order R1..R4:
///   R1  identical CNOTs adjacent on both wires cancel;
///   R2  adjacent equal self-inverse 1-qubit gates (H H, X X) cancel;
///   R3  control-bit change on a maximal run of CNOTs that share a target
///       and are consecutive on it (distinct controls), applied only when
///       the inserted Hadamards cancel strictly more gates than they add;
///   R4  the last gate on an unmeasured qubit is dropped if it is 1-qubit,
///       or a CNOT whose two qubits are both unmeasured and both end there.
/// Width is kept; compact() drops the idle qubits. Never increases CN.
Circuit peephole_optimize(const Circuit& c);

/// peephole(route(peephole(c), g, cfg)).
Circuit compile(const Circuit& c, const TopologyGraph& g, const Configuration& cfg);

/// Wire pairs joined by a CNOT, each as (low, high), ascending.
std::vector<std::pair<int, int>> interaction_pairs(const Circuit& c);

struct SearchResult {
    Configuration config;
    CircuitNorm norm;
};

/// Minimum-CN placement of build_simon_circuit(f) on g.
///
/// First looks for placements in which every interacting pair of the
/// optimized logical circuit is adjacent, so routing adds nothing and CN
/// equals the logical optimum. Wires are assigned x_0..x_{n-1} then y's,
/// vertices ascending, so the first hit is lexicographically least on the
/// active wires. Wires left idle by the optimizer take the lowest free
/// vertices. Without such a placement, every injective placement of the
/// active wires is compiled and the least CN wins, ties lexicographic.
/// Throws CapacityError when 2n exceeds the vertex count.
SearchResult search_min_configuration(const SimonFunction& f, const TopologyGraph& g);

/// Up to `limit` distinct minimum-CN configurations in lexicographic order.
std::vector<Configuration> enumerate_min_configurations(const SimonFunction& f, const TopologyGraph& g,
                                                        std::size_t limit);

/// Configuration whose measured qubits have the least summed readout error
/// under `noise`; ties keep the earlier entry. Requires a nonempty list.
const Configuration& best_quality_configuration(const std::vector<Configuration>& configs,
                                                const SimonFunction& f, const NoiseParams& noise);

}  // namespace nsimon
