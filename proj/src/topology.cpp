#include <algorithm>
#include <bit>
#include <deque>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "nsimon/error.hpp"
#include "nsimon/topology.hpp"

namespace nsimon {

TopologyGraph::TopologyGraph(int vertices, const std::vector<std::pair<int, int>>& edges) : n_(vertices) {
    if (vertices < 0 || vertices > kMaxVertices) throw CapacityError("topology limited to 64 vertices");
    adj_.assign(static_cast<std::size_t>(vertices), 0);
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n_ || b >= n_) throw DimensionError("edge references a missing vertex");
        if (a == b) throw DimensionError("self-loop in topology");
        if (a > b) std::swap(a, b);
        if (adjacent(a, b)) continue;
        adj_[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
        adj_[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
        edges_.emplace_back(a, b);
    }
    std::sort(edges_.begin(), edges_.end());
}

TopologyGraph TopologyGraph::ibmq16() {
    return TopologyGraph(15, {{0, 1},  {1, 2},  {2, 3},   {3, 4},   {4, 5},   {5, 6},   {0, 14},
                              {1, 13}, {2, 12}, {3, 11},  {4, 10},  {5, 9},   {6, 8},   {7, 8},
                              {8, 9},  {9, 10}, {10, 11}, {11, 12}, {12, 13}, {13, 14}});
}

bool TopologyGraph::adjacent(int a, int b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
    return (adj_[static_cast<std::size_t>(a)] >> b) & 1u;
}

int TopologyGraph::degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }

std::vector<int> TopologyGraph::shortest_path(int from, int to) const {
    if (from < 0 || to < 0 || from >= n_ || to >= n_) throw DimensionError("path endpoint outside topology");
    std::vector<int> parent(static_cast<std::size_t>(n_), -1);
    parent[static_cast<std::size_t>(from)] = from;
    std::deque<int> queue{from};
    while (!queue.empty() && parent[static_cast<std::size_t>(to)] < 0) {
        const int v = queue.front();
        queue.pop_front();
        for (std::uint64_t rest = adj_[static_cast<std::size_t>(v)]; rest != 0; rest &= rest - 1) {
            const int w = std::countr_zero(rest);
            if (parent[static_cast<std::size_t>(w)] >= 0) continue;
            parent[static_cast<std::size_t>(w)] = v;
            queue.push_back(w);
        }
    }
    if (parent[static_cast<std::size_t>(to)] < 0) {
        throw RoutingError("qubits " + std::to_string(from) + " and " + std::to_string(to) + " are disconnected");
    }
    std::vector<int> path{to};
    while (path.back() != from) path.push_back(parent[static_cast<std::size_t>(path.back())]);
    std::reverse(path.begin(), path.end());
    return path;
}

TopologyGraph parse_topology_json(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        return TopologyGraph(j.at("vertices").get<int>(), j.at("edges").get<std::vector<std::pair<int, int>>>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("topology json: ") + e.what());
    }
}

TopologyGraph load_topology_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open topology file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_topology_json(ss.str());
}

std::string topology_to_json(const TopologyGraph& g) {
    nlohmann::json j;
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edges();
    return j.dump();
}

}  // namespace nsimon
