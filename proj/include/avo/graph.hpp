#pragma once

#include "avo/errors.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

namespace avo {

// Unordered vertex pair in canonical form (u < v).
struct Edge {
    int u;
    int v;
    auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(int a, int b)
{
    if (a == b)
        throw error("self-loop is not a valid edge");
    return a < b ? Edge{a, b} : Edge{b, a};
}

// Simple undirected graph on vertices 0..n-1. Immutable after construction:
// adjacency lists are sorted, edges are deduplicated, self-loops rejected.
class Graph {
public:
    explicit Graph(int n)
        : Graph(n, {})
    {
    }
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const
    {
        if (u == v)
            return false;
        if (!bits_.empty())
            return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
        return edge_keys_.count(key(u, v)) != 0;
    }

    bool has_vertex(int v) const { return v >= 0 && v < n_; }

    bool operator==(const Graph& other) const
    {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    static std::uint64_t key(int u, int v)
    {
        if (u > v)
            std::swap(u, v);
        return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    }

    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> bits_;             // adjacency matrix rows, small n only
    std::unordered_set<std::uint64_t> edge_keys_; // fallback for large n
};

// Graph with nonnegative integer vertex weights, one per vertex.
struct WeightedGraph {
    WeightedGraph(Graph g, std::vector<std::uint64_t> w)
        : graph(std::move(g))
        , weights(std::move(w))
    {
        if (static_cast<int>(weights.size()) != graph.vertex_count())
            throw error("weight vector length must equal the vertex count");
    }
    Graph graph;
    std::vector<std::uint64_t> weights;
};

// Vertex sequence meant to be an induced path of some host graph.
struct InducedPath {
    std::vector<int> vertices;
    auto operator<=>(const InducedPath&) const = default;
};

bool is_induced_path(const Graph& g, std::span<const int> seq);
// Closed vertex sequence (last wraps to first); chordless, length >= 4.
bool is_induced_cycle(const Graph& g, std::span<const int> seq);

Graph complement(const Graph& g);

struct LineGraphResult {
    Graph graph;
    std::vector<Edge> vertex_edges; // host edge represented by each line-graph vertex
};
LineGraphResult line_graph(const Graph& g);

struct InducedSubgraphResult {
    Graph graph;
    std::vector<int> vertex_map; // new id -> old id, ascending
};
InducedSubgraphResult induced_subgraph(const Graph& g, std::span<const int> s);

// BFS distances from s; kUnreachable marks vertices in other components.
inline constexpr int kUnreachable = -1;
std::vector<int> distances_from(const Graph& g, int s);
int eccentricity(const Graph& g, int s); // kUnreachable if g disconnected
int diameter(const Graph& g);            // kUnreachable if g disconnected

// Partition of V into components; each sorted ascending, ordered by min vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Two-coloring if g is bipartite: (side of color 0, side of color 1).
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g);

} // namespace avo
