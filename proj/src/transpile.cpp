#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <sstream>

#include "nsimon/transpile.hpp"

namespace nsimon {

CircuitNorm circuit_norm(const Circuit& c) {
    CircuitNorm cn;
    for (const auto& g : c.gates()) (g.two_qubit() ? cn.g2 : cn.g1)++;
    return cn;
}

void Configuration::validate(const TopologyGraph& g) const {
    std::set<int> seen;
    for (int v : physical) {
        if (v < 0 || v >= g.vertex_count()) throw DimensionError("configuration uses a missing vertex");
        if (!seen.insert(v).second) throw DimensionError("configuration is not injective");
    }
}

std::string Configuration::to_string() const {
    std::vector<std::pair<int, int>> order;
    for (int w = 0; w < wires(); ++w) order.emplace_back(physical[static_cast<std::size_t>(w)], w);
    std::sort(order.begin(), order.end());
    const bool simon = wires() % 2 == 0;
    const int n = wires() / 2;
    std::ostringstream out;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const auto [q, w] = order[k];
        if (k) out << ' ';
        out << q << ':';
        if (simon) {
            out << (w < n ? 'x' : 'y') << (w < n ? w : w - n);
        } else {
            out << 'w' << w;
        }
    }
    return out.str();
}

Configuration naive_configuration(int n) {
    Configuration cfg;
    for (int w = 0; w < 2 * n; ++w) cfg.physical.push_back(w);
    return cfg;
}

// ---------------------------------------------------------------------------
// Routing

Circuit route(const Circuit& c, const TopologyGraph& g, const Configuration& cfg) {
    if (cfg.wires() != c.width()) throw DimensionError("configuration does not cover every logical wire");
    cfg.validate(g);

    std::vector<int> pos = cfg.physical;
    std::vector<int> occupant(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int w = 0; w < c.width(); ++w) occupant[static_cast<std::size_t>(pos[static_cast<std::size_t>(w)])] = w;

    Circuit out(g.vertex_count());
    auto swap_sites = [&](int a, int b) {
        out.cnot(a, b).cnot(b, a).cnot(a, b);
        const int wa = occupant[static_cast<std::size_t>(a)];
        const int wb = occupant[static_cast<std::size_t>(b)];
        occupant[static_cast<std::size_t>(a)] = wb;
        occupant[static_cast<std::size_t>(b)] = wa;
        if (wa >= 0) pos[static_cast<std::size_t>(wa)] = b;
        if (wb >= 0) pos[static_cast<std::size_t>(wb)] = a;
    };

    for (const auto& gate : c.gates()) {
        if (!gate.two_qubit()) {
            out.add(Gate{gate.kind, pos[static_cast<std::size_t>(gate.target)], -1});
            continue;
        }
        const int pc = pos[static_cast<std::size_t>(gate.control)];
        if (!g.adjacent(pc, pos[static_cast<std::size_t>(gate.target)])) {
            const auto path = g.shortest_path(pos[static_cast<std::size_t>(gate.target)], pc);
            for (std::size_t k = 0; k + 2 < path.size(); ++k) swap_sites(path[k], path[k + 1]);
        }
        out.cnot(pc, pos[static_cast<std::size_t>(gate.target)]);
    }

    std::vector<int> measured;
    for (int w : c.measured()) measured.push_back(pos[static_cast<std::size_t>(w)]);
    out.measure(std::move(measured));
    return out;
}

// ---------------------------------------------------------------------------
// Peephole rules

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::size_t next_on(const std::vector<Gate>& gs, std::size_t i, int q) {
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
        if (gs[j].acts_on(q)) return j;
    }
    return kNone;
}

std::size_t prev_on(const std::vector<Gate>& gs, std::size_t i, int q) {
    for (std::size_t j = i; j-- > 0;) {
        if (gs[j].acts_on(q)) return j;
    }
    return kNone;
}

void erase_marked(std::vector<Gate>& gs, const std::vector<bool>& dead) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        if (!dead[i]) gs[k++] = gs[i];
    }
    gs.resize(k);
}

bool is_h(const std::vector<Gate>& gs, std::size_t j) { return j != kNone && gs[j].kind == GateKind::H; }

// R1 and R2 share one shape: a gate and the next gate on its wire(s) are
// equal self-inverse gates.
bool cancel_pairs(std::vector<Gate>& gs, bool two_qubit) {
    std::vector<bool> dead(gs.size(), false);
    bool changed = false;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        if (dead[i] || gs[i].two_qubit() != two_qubit) continue;
        std::size_t j = next_on(gs, i, gs[i].target);
        if (two_qubit) j = std::min(j, next_on(gs, i, gs[i].control));
        if (j == kNone || dead[j] || !(gs[j] == gs[i])) continue;
        dead[i] = dead[j] = true;
        changed = true;
    }
    if (changed) erase_marked(gs, dead);
    return changed;
}

// R3. A block is a maximal run of CNOTs with target t, consecutive among the
// gates on wire t and with pairwise distinct controls.
bool control_bit_change(std::vector<Gate>& gs, int width) {
    for (int t = 0; t < width; ++t) {
        std::vector<std::size_t> on_t;
        for (std::size_t i = 0; i < gs.size(); ++i) {
            if (gs[i].acts_on(t)) on_t.push_back(i);
        }
        std::size_t k = 0;
        while (k < on_t.size()) {
            const Gate& first = gs[on_t[k]];
            if (!first.two_qubit() || first.target != t) {
                ++k;
                continue;
            }
            std::vector<std::size_t> block{on_t[k]};
            std::set<int> controls{first.control};
            std::size_t e = k + 1;
            while (e < on_t.size()) {
                const Gate& gnext = gs[on_t[e]];
                if (!gnext.two_qubit() || gnext.target != t || !controls.insert(gnext.control).second) break;
                block.push_back(on_t[e]);
                ++e;
            }

            int delta = 0;
            delta += is_h(gs, prev_on(gs, block.front(), t)) ? -1 : 1;
            delta += is_h(gs, next_on(gs, block.back(), t)) ? -1 : 1;
            for (std::size_t b : block) {
                delta += is_h(gs, prev_on(gs, b, gs[b].control)) ? -1 : 1;
                delta += is_h(gs, next_on(gs, b, gs[b].control)) ? -1 : 1;
            }
            if (delta < 0) {
                std::vector<Gate> out;
                out.reserve(gs.size() + 2 * block.size() + 2);
                for (std::size_t i = 0; i < gs.size(); ++i) {
                    if (std::find(block.begin(), block.end(), i) == block.end()) {
                        out.push_back(gs[i]);
                        continue;
                    }
                    const int c = gs[i].control;
                    if (i == block.front()) out.push_back(Gate::h(t));
                    out.push_back(Gate::h(c));
                    out.push_back(Gate::cnot(t, c));
                    out.push_back(Gate::h(c));
                    if (i == block.back()) out.push_back(Gate::h(t));
                }
                gs = std::move(out);
                return true;
            }
            k = e;
        }
    }
    return false;
}

// R4.
bool drop_terminal(std::vector<Gate>& gs, const Circuit& shape) {
    bool any = false;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int q = 0; q < shape.width(); ++q) {
            if (shape.is_measured(q)) continue;
            const std::size_t j = prev_on(gs, gs.size(), q);
            if (j == kNone) continue;
            const Gate& g = gs[j];
            if (g.two_qubit()) {
                const int other = g.control == q ? g.target : g.control;
                if (shape.is_measured(other) || next_on(gs, j, other) != kNone) continue;
            }
            gs.erase(gs.begin() + static_cast<std::ptrdiff_t>(j));
            changed = any = true;
        }
    }
    return any;
}

}  // namespace

Circuit peephole_optimize(const Circuit& c) {
    std::vector<Gate> gs = c.gates();
    bool changed = true;
    while (changed) {
        changed = false;
        changed |= cancel_pairs(gs, true);
        changed |= cancel_pairs(gs, false);
        changed |= control_bit_change(gs, c.width());
        changed |= drop_terminal(gs, c);
    }
    return Circuit(c.width(), std::move(gs), c.measured());
}

Circuit compile(const Circuit& c, const TopologyGraph& g, const Configuration& cfg) {
    return peephole_optimize(route(peephole_optimize(c), g, cfg));
}

std::vector<std::pair<int, int>> interaction_pairs(const Circuit& c) {
    std::set<std::pair<int, int>> pairs;
    for (const auto& g : c.gates()) {
        if (g.two_qubit()) pairs.emplace(std::min(g.control, g.target), std::max(g.control, g.target));
    }
    return {pairs.begin(), pairs.end()};
}

// ---------------------------------------------------------------------------
// Configuration search

namespace {

struct SearchSpace {
    Circuit logical;
    Circuit optimized;
    std::vector<int> active;          // wire indices, ascending
    std::vector<int> idle;            // wire indices, ascending
    std::vector<std::uint64_t> peers;  // per wire: interacting wires
};

SearchSpace make_space(const SimonFunction& f, const TopologyGraph& g) {
    const int n = f.n();
    if (2 * n > g.vertex_count()) {
        throw CapacityError("Simon circuit needs " + std::to_string(2 * n) + " qubits, topology has " +
                            std::to_string(g.vertex_count()));
    }
    SearchSpace s{build_simon_circuit(f), Circuit(), {}, {}, {}};
    s.optimized = peephole_optimize(s.logical);
    s.active = s.optimized.active_qubits();
    for (int w = 0; w < 2 * n; ++w) {
        if (!std::binary_search(s.active.begin(), s.active.end(), w)) s.idle.push_back(w);
    }
    s.peers.assign(static_cast<std::size_t>(2 * n), 0);
    for (auto [a, b] : interaction_pairs(s.optimized)) {
        s.peers[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
        s.peers[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
    }
    return s;
}

Configuration complete(const SearchSpace& s, const std::vector<int>& active_pos) {
    Configuration cfg;
    cfg.physical.assign(s.active.size() + s.idle.size(), -1);
    std::uint64_t used = 0;
    for (std::size_t k = 0; k < s.active.size(); ++k) {
        cfg.physical[static_cast<std::size_t>(s.active[k])] = active_pos[k];
        used |= std::uint64_t{1} << active_pos[k];
    }
    for (int w : s.idle) {
        const int v = std::countr_one(used);
        cfg.physical[static_cast<std::size_t>(w)] = v;
        used |= std::uint64_t{1} << v;
    }
    return cfg;
}

// Placements where every interacting pair is adjacent, via forward checking
// on vertex bitmask domains.
class EmbeddingSearch {
public:
    EmbeddingSearch(const SearchSpace& s, const TopologyGraph& g, std::size_t limit)
        : s_(s), g_(g), limit_(limit), pos_(s.active.size(), -1) {}

    std::vector<Configuration> run() {
        const std::uint64_t all = low_mask(g_.vertex_count());
        std::vector<std::uint64_t> domains(s_.active.size(), all);
        if (!s_.active.empty()) extend(0, domains);
        return std::move(found_);
    }

private:
    void extend(std::size_t k, const std::vector<std::uint64_t>& domains) {
        const int wire = s_.active[k];
        for (std::uint64_t rest = domains[k]; rest != 0 && found_.size() < limit_; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            pos_[k] = v;
            if (k + 1 == s_.active.size()) {
                found_.push_back(complete(s_, pos_));
                continue;
            }
            std::vector<std::uint64_t> next = domains;
            bool ok = true;
            for (std::size_t m = k + 1; m < next.size() && ok; ++m) {
                next[m] &= ~(std::uint64_t{1} << v);
                if ((s_.peers[static_cast<std::size_t>(wire)] >> s_.active[m]) & 1u) next[m] &= g_.neighbours(v);
                ok = next[m] != 0;
            }
            if (ok) extend(k + 1, next);
        }
    }

    const SearchSpace& s_;
    const TopologyGraph& g_;
    std::size_t limit_;
    std::vector<int> pos_;
    std::vector<Configuration> found_;
};

// Fallback: compile every injective placement of the active wires.
std::vector<Configuration> exhaustive_minimum(const SearchSpace& s, const TopologyGraph& g, std::size_t limit) {
    std::vector<Configuration> best;
    int best_cn = std::numeric_limits<int>::max();
    std::vector<int> pos(s.active.size(), -1);
    std::uint64_t used = 0;

    auto visit = [&](auto&& self, std::size_t k) -> void {
        if (k == s.active.size()) {
            Configuration cfg = complete(s, pos);
            int cn = 0;
            try {
                cn = circuit_norm(compile(s.logical, g, cfg)).value();
            } catch (const RoutingError&) {
                return;
            }
            if (cn < best_cn) {
                best_cn = cn;
                best.clear();
            }
            if (cn == best_cn && best.size() < limit) best.push_back(std::move(cfg));
            return;
        }
        for (int v = 0; v < g.vertex_count(); ++v) {
            if ((used >> v) & 1u) continue;
            pos[k] = v;
            used |= std::uint64_t{1} << v;
            self(self, k + 1);
            used &= ~(std::uint64_t{1} << v);
        }
    };
    visit(visit, 0);
    if (best.empty()) throw RoutingError("no placement of the circuit can be routed on this topology");
    return best;
}

}  // namespace

std::vector<Configuration> enumerate_min_configurations(const SimonFunction& f, const TopologyGraph& g,
                                                        std::size_t limit) {
    const SearchSpace s = make_space(f, g);
    if (limit == 0) return {};
    auto configs = EmbeddingSearch(s, g, limit).run();
    if (!configs.empty()) return configs;
    return exhaustive_minimum(s, g, limit);
}

SearchResult search_min_configuration(const SimonFunction& f, const TopologyGraph& g) {
    auto configs = enumerate_min_configurations(f, g, 1);
    const Circuit logical = build_simon_circuit(f);
    return {configs.front(), circuit_norm(compile(logical, g, configs.front()))};
}

const Configuration& best_quality_configuration(const std::vector<Configuration>& configs, const SimonFunction& f,
                                                const NoiseParams& noise) {
    if (configs.empty()) throw EmptyError("no configurations to choose from");
    const Configuration* best = nullptr;
    double best_score = std::numeric_limits<double>::infinity();
    for (const auto& cfg : configs) {
        double score = 0.0;
        for (int i = 0; i < f.n(); ++i) {
            const int q = cfg.physical[static_cast<std::size_t>(x_wire(i))];
            score += noise.readout_01(q) + noise.readout_10(q);
        }
        if (score < best_score) {
            best_score = score;
            best = &cfg;
        }
    }
    return *best;
}

}  // namespace nsimon
