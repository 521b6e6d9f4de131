#pragma once

#include "avo/graph.hpp"

#include <optional>

namespace avo {

// Permutation of 0..n-1 with its inverse for O(1) position lookup.
struct VertexOrdering {
    std::vector<int> sequence;
    std::vector<int> position;

    static VertexOrdering from_sequence(std::vector<int> seq);
    int size() const { return static_cast<int>(sequence.size()); }
};

// Lexicographic breadth-first search by partition refinement, O(n + m).
// Ties break toward the smallest vertex id. On disconnected graphs the
// components are searched in order of their minimum vertex id (the start
// vertex's component first when a start is given) and the orderings
// concatenated.
VertexOrdering lbfs(const Graph& g, std::optional<int> start = {});

// Maximum cardinality search with the same tie-break and component rules.
VertexOrdering mcs(const Graph& g, std::optional<int> start = {});

// Exact set of vertices that can come last in some LBFS (resp. MCS)
// execution, over every start vertex and every tie-break. Exponential;
// guarded by the bound.
std::vector<int> lbfs_all_end_vertices(const Graph& g, int max_n = 10);
std::vector<int> mcs_all_end_vertices(const Graph& g, int max_n = 10);

// Two distinct avoidable vertices via a double LBFS sweep. Linear time.
std::pair<int, int> two_avoidable(const Graph& g);

struct DiametralPair {
    int a;
    int b;
    int distance;
};

// Pair of avoidable vertices realizing the diameter: start the first sweep
// from a vertex of maximum eccentricity. Requires a connected graph.
DiametralPair diametral_avoidable_pair(const Graph& g);

} // namespace avo
