#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"

#include "nsimon/rng.hpp"
#include "nsimon/statevector.hpp"
#include "nsimon/transpile.hpp"

using namespace nsimon;

namespace {

const TopologyGraph& q16() {
    static const TopologyGraph g = TopologyGraph::ibmq16();
    return g;
}

TopologyGraph path_graph(int v) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < v; ++i) e.emplace_back(i, i + 1);
    return TopologyGraph(v, e);
}

bool all_adjacent(const Circuit& c, const TopologyGraph& g) {
    return std::all_of(c.gates().begin(), c.gates().end(),
                       [&](const Gate& x) { return !x.two_qubit() || g.adjacent(x.control, x.target); });
}

Circuit random_circuit(int width, int gates, Rng& rng) {
    Circuit c(width);
    for (int k = 0; k < gates; ++k) {
        const int a = static_cast<int>(rng() % static_cast<std::uint64_t>(width));
        const int r = static_cast<int>(rng() % 4);
        if (r == 0) {
            c.x(a);
        } else if (r == 1) {
            c.h(a);
        } else {
            const int b = (a + 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(width - 1))) % width;
            c.cnot(a, b);
        }
    }
    std::vector<int> measured;
    for (int q = 0; q < width; ++q) {
        if (rng() % 2 == 0) measured.push_back(q);
    }
    if (measured.empty()) measured.push_back(0);
    c.measure(measured);
    return c;
}

Configuration random_configuration(int wires, const TopologyGraph& g, Rng& rng) {
    std::vector<int> v(static_cast<std::size_t>(g.vertex_count()));
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(v.begin(), v.end(), rng);
    v.resize(static_cast<std::size_t>(wires));
    return Configuration{v};
}

// Every wire but y_0, which the optimizer leaves idle for the standard s.
std::vector<int> projected(const Configuration& cfg, int n) {
    std::vector<int> out;
    for (int w = 0; w < 2 * n; ++w) {
        if (w != n) out.push_back(cfg.physical[static_cast<std::size_t>(w)]);
    }
    return out;
}

}  // namespace

TEST_SUITE("transpile") {
    TEST_CASE("topology fixture") {
        const TopologyGraph g = load_topology_json(std::filesystem::path(NSIMON_DATA_DIR) / "topology" /
                                                   "ibmq16_melbourne.json");
        CHECK(g == q16());
        CHECK(g.vertex_count() == 15);
        CHECK(g.edges().size() == 20);
        CHECK(g.degree(7) == 1);
        CHECK(parse_topology_json(topology_to_json(g)) == g);
        CHECK_THROWS_AS(parse_topology_json(R"({"vertices": 2, "edges": [[0, 0]]})"), DimensionError);
        CHECK_THROWS_AS(parse_topology_json(R"({"vertices": 2, "edges": [[0, 2]]})"), DimensionError);
        CHECK_THROWS_AS(parse_topology_json(R"({"edges": []})"), ParseError);
    }

    TEST_CASE("shortest paths break ties towards low vertices") {
        CHECK(q16().shortest_path(0, 2) == std::vector<int>{0, 1, 2});
        // 1 -> 12 has two shortest routes, via 2 and via 13.
        CHECK(q16().shortest_path(1, 12) == std::vector<int>{1, 2, 12});
        CHECK(q16().shortest_path(4, 4) == std::vector<int>{4});
        const TopologyGraph split(4, {{0, 1}, {2, 3}});
        CHECK_THROWS_AS(split.shortest_path(0, 3), RoutingError);
    }

    TEST_CASE("circuit norm examples") {
        CHECK(circuit_norm(build_simon_circuit(SimonFunction::standard(3))).value() == 56);
        CHECK(circuit_norm(Circuit(4)).value() == 0);
        Circuit c(2);
        c.h(0).x(1).cnot(0, 1);
        CHECK(circuit_norm(c) == CircuitNorm{2, 1});
    }

    TEST_CASE("route inserts one swap for distance two") {
        Circuit c(4);
        c.h(1).cnot(1, 3).measure({1, 3});
        const Circuit r = route(c, path_graph(4), naive_configuration(2));
        CHECK(circuit_norm(r) == CircuitNorm{1, 4});
        CHECK(all_adjacent(r, path_graph(4)));
        CHECK(circuits_equivalent(c, r));
        // The target moved from 3 to 2.
        CHECK(r.measured() == std::vector<int>{1, 2});

        Circuit adj(2);
        adj.cnot(0, 1).measure({0, 1});
        CHECK(route(adj, path_graph(2), naive_configuration(1)) == adj);

        CHECK_THROWS_AS(route(c, TopologyGraph(4, {{0, 1}, {2, 3}}), naive_configuration(2)), RoutingError);
        CHECK_THROWS_AS(route(c, path_graph(4), Configuration{{0, 1, 2}}), DimensionError);
        CHECK_THROWS_AS(route(c, path_graph(4), Configuration{{0, 1, 2, 2}}), DimensionError);
    }

    TEST_CASE("naive routing of the n = 3 circuit") {
        const Circuit q1 = build_simon_circuit(SimonFunction::standard(3));
        const Circuit q2 = route(q1, q16(), naive_configuration(3));
        CHECK(circuit_norm(q2).value() == 206);
        CHECK(circuit_norm(q2) == CircuitNorm{6, 20});
        CHECK(all_adjacent(q2, q16()));
        CHECK(circuits_equivalent(q1, q2));
    }

    TEST_CASE("optimizing a swap-free layout of the n = 3 circuit") {
        const Circuit q1 = build_simon_circuit(SimonFunction::standard(3));
        const Circuit q3 = route(q1, q16(), Configuration{{2, 0, 4, 3, 1, 5}});
        CHECK(circuit_norm(q3).value() == 56);
        const Circuit q4 = peephole_optimize(q3);
        CHECK(circuit_norm(q4).value() == 33);
        CHECK(circuits_equivalent(q1, q4));
        CHECK(circuit_norm(peephole_optimize(q1)).value() == 33);
    }

    TEST_CASE("peephole rules") {
        Circuit pair(2);
        pair.cnot(0, 1).cnot(0, 1).measure({0, 1});
        CHECK(peephole_optimize(pair).gates().empty());

        Circuit hh(1);
        hh.h(0).h(0).x(0).x(0).measure({0});
        CHECK(peephole_optimize(hh).gates().empty());

        Circuit flip(2);
        flip.h(0).h(1).cnot(0, 1).h(0).h(1).measure({0, 1});
        const Circuit flipped = peephole_optimize(flip);
        REQUIRE(flipped.gates().size() == 1);
        CHECK(flipped.gates()[0] == Gate::cnot(1, 0));

        // One neighbouring H is not enough to pay for four inserted ones.
        Circuit keep(2);
        keep.h(1).cnot(0, 1).measure({0, 1});
        CHECK(peephole_optimize(keep) == keep);

        Circuit tail(3);
        tail.h(0).cnot(0, 1).h(2).cnot(2, 1).measure({0});
        const Circuit t = peephole_optimize(tail);
        CHECK(circuits_equivalent(tail, t));
        // H on 2 and CNOT(2,1) end on unmeasured qubits; CNOT(0,1) touches measured 0 and stays.
        CHECK(t.gates().size() == 2);

        const Circuit q4 = compile(build_simon_circuit(SimonFunction::standard(3)), q16(),
                                   Configuration{{1, 14, 8, 6, 0, 9}});
        CHECK(peephole_optimize(q4) == q4);
    }

    TEST_CASE("peephole is a sound, CN-reducing fixpoint on random circuits") {
        Rng rng = make_stream(51, 0);
        for (int trial = 0; trial < 400; ++trial) {
            const int width = 2 + static_cast<int>(rng() % 4);
            const Circuit c = random_circuit(width, 4 + static_cast<int>(rng() % 24), rng);
            const Circuit p = peephole_optimize(c);
            CHECK(circuit_norm(p).value() <= circuit_norm(c).value());
            CHECK(peephole_optimize(p) == p);
            CHECK(circuits_equivalent(c, p));
        }
    }

    TEST_CASE("route and compile preserve the output distribution, n <= 5") {
        Rng rng = make_stream(52, 0);
        for (int n = 2; n <= 5; ++n) {
            const Circuit q = build_simon_circuit(SimonFunction::standard(n));
            for (int k = 0; k < 6; ++k) {
                const Configuration cfg = random_configuration(2 * n, q16(), rng);
                const Circuit r = route(q, q16(), cfg);
                CHECK(all_adjacent(r, q16()));
                CHECK(circuits_equivalent(q, r));
                const Circuit c = compile(q, q16(), cfg);
                CHECK(all_adjacent(c, q16()));
                CHECK(circuits_equivalent(q, c));
            }
        }
        // Random logical circuits as well.
        for (int trial = 0; trial < 60; ++trial) {
            const Circuit c = random_circuit(5, 12, rng);
            const Configuration cfg = random_configuration(5, q16(), rng);
            CHECK(circuits_equivalent(c, route(c, q16(), cfg)));
            CHECK(circuits_equivalent(c, compile(c, q16(), cfg)));
        }
    }

    TEST_CASE("minimum configurations on the 15-qubit device") {
        for (int n = 2; n <= 7; ++n) {
            const SimonFunction f = SimonFunction::standard(n);
            const SearchResult r = search_min_configuration(f, q16());
            CHECK(r.norm.value() == 12 * n - 3);
            r.config.validate(q16());
            const Circuit c = compile(build_simon_circuit(f), q16(), r.config);
            CHECK(circuit_norm(c) == r.norm);
            CHECK(all_adjacent(c, q16()));
        }
        CHECK_THROWS_AS(search_min_configuration(SimonFunction::standard(8), q16()), CapacityError);
    }

    TEST_CASE("lexicographically first configuration for n = 3") {
        CHECK(search_min_configuration(SimonFunction::standard(3), q16()).config.to_string() ==
              "0:x0 1:y1 2:x1 3:x2 4:y2 5:y0");
    }

    TEST_CASE("no placement beats the optimized logical circuit, n = 2 exhaustive") {
        const SimonFunction f = SimonFunction::standard(2);
        const Circuit q = build_simon_circuit(f);
        int best = std::numeric_limits<int>::max();
        for (int a = 0; a < 15; ++a) {
            for (int b = 0; b < 15; ++b) {
                for (int c = 0; c < 15; ++c) {
                    for (int d = 0; d < 15; ++d) {
                        if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                        best = std::min(best, circuit_norm(compile(q, q16(), Configuration{{a, b, c, d}})).value());
                    }
                }
            }
        }
        CHECK(best == 21);
    }

    TEST_CASE("fallback search on a star compiles every placement") {
        // K_{1,5}: no placement makes every interacting pair adjacent.
        const TopologyGraph star(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
        const SimonFunction f = SimonFunction::standard(3);
        const Circuit q = build_simon_circuit(f);
        std::vector<int> perm{0, 1, 2, 3, 4, 5};
        int best = std::numeric_limits<int>::max();
        do {
            best = std::min(best, circuit_norm(compile(q, star, Configuration{perm})).value());
        } while (std::next_permutation(perm.begin(), perm.end()));
        const SearchResult r = search_min_configuration(f, star);
        CHECK(best > 33);
        CHECK(r.norm.value() == best);
        CHECK(circuits_equivalent(q, compile(q, star, r.config)));
        for (const auto& cfg : enumerate_min_configurations(f, star, 10)) {
            CHECK(circuit_norm(compile(q, star, cfg)).value() == best);
        }
    }

    TEST_CASE("enumerated minimum configurations") {
        const SimonFunction f = SimonFunction::standard(3);
        const Circuit q = build_simon_circuit(f);
        const auto all = enumerate_min_configurations(f, q16(), 100000);
        CHECK(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) {
            return projected(a, 3) < projected(b, 3);
        }));
        std::set<std::vector<int>> seen;
        for (const auto& cfg : all) {
            CHECK(seen.insert(projected(cfg, 3)).second);
            CHECK(circuit_norm(compile(q, q16(), cfg)).value() == 33);
        }
        CHECK(seen.count(projected(Configuration{{1, 14, 8, 6, 0, 9}}, 3)) == 1);
        CHECK(seen.count(projected(Configuration{{4, 6, 9, 3, 5, 8}}, 3)) == 1);
        CHECK(enumerate_min_configurations(f, q16(), 1).size() == 1);
        CHECK(enumerate_min_configurations(f, q16(), 1).front() == all.front());
    }

    TEST_CASE("quality tie-break prefers low readout error") {
        const SimonFunction f = SimonFunction::standard(2);
        const auto configs = enumerate_min_configurations(f, q16(), 50);
        REQUIRE(configs.size() >= 2);
        NoiseParams noise = NoiseParams::uniform(0.0, 0.05, 0.05);
        noise.p01.assign(15, 0.05);
        noise.p10.assign(15, 0.05);
        const Configuration& target = configs[7];
        for (int i = 0; i < 2; ++i) noise.p01[static_cast<std::size_t>(target.physical[static_cast<std::size_t>(i)])] = 0.0;
        const Configuration& picked = best_quality_configuration(configs, f, noise);
        CHECK(picked.physical[0] == target.physical[0]);
        CHECK(picked.physical[1] == target.physical[1]);
        CHECK(&best_quality_configuration(configs, f, NoiseParams::noiseless()) == &configs.front());
        CHECK_THROWS_AS(best_quality_configuration({}, f, noise), EmptyError);
    }

    TEST_CASE("configuration text and interaction pairs") {
        CHECK(naive_configuration(2).to_string() == "0:x0 1:x1 2:y0 3:y1");
        const Circuit q = build_simon_circuit(SimonFunction::standard(2));
        CHECK(interaction_pairs(q) == std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 3}});
    }
}
