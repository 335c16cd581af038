#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace nsimon {

/// Undirected coupling graph of a device, at most 64 vertices.
class TopologyGraph {
public:
    static constexpr int kMaxVertices = 64;

    TopologyGraph() = default;
    TopologyGraph(int vertices, const std::vector<std::pair<int, int>>& edges);

    /// The 15-qubit IBM-Q16 Melbourne coupling graph (qubit 7 has degree 1).
    static TopologyGraph ibmq16();

    int vertex_count() const { return n_; }
    /// Edges as (a, b) with a < b, ascending.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool adjacent(int a, int b) const;
    std::uint64_t neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const;

    /// Shortest path from `from` to `to`, both ends included. BFS visits
    /// neighbours in ascending order, so ties go to the lowest vertex index.
    /// Throws RoutingError when no path exists.
    std::vector<int> shortest_path(int from, int to) const;

    friend bool operator==(const TopologyGraph&, const TopologyGraph&) = default;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint64_t> adj_;
};

/// `{"vertices": V, "edges": [[a, b], ...]}`.
TopologyGraph parse_topology_json(const std::string& text);
TopologyGraph load_topology_json(const std::filesystem::path& path);
std::string topology_to_json(const TopologyGraph& g);

}  // namespace nsimon
