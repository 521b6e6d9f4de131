#pragma once

#include "avo/graph.hpp"
#include "avo/search.hpp"

#include <optional>

namespace avo {

// Base graph together with a set of fill edges disjoint from its edge set.
struct Triangulation {
    Triangulation(Graph base_graph, std::vector<Edge> fill_edges);
    Graph filled() const;

    Graph base;
    std::vector<Edge> fill; // canonical, ascending
};

// Non-adjacent pairs inside N(v).
std::vector<Edge> deficiency(const Graph& g, int v);

// Elimination procedure along sigma: saturate each vertex's current
// neighborhood, remove it, and collect the added edges. The filled graph is
// always chordal.
Triangulation elimination_fill(const Graph& g, const VertexOrdering& sigma);

struct ChordalityResult {
    bool chordal;
    std::optional<VertexOrdering> peo; // reverse LBFS order when chordal
};
ChordalityResult is_chordal(const Graph& g);

// Single-edge criterion: minimal iff no one fill edge can be dropped while
// keeping the filled graph chordal.
bool is_minimal_triangulation(const Triangulation& t);

// Minimal triangulation of g sandwiched inside the chordal supergraph h,
// by greedily dropping removable fill edges in ascending order.
Triangulation minimal_triangulation_below(const Graph& g, const Graph& h);

// Constructive test equivalent to avoidability: complete V - {v} into a
// clique, take a minimal triangulation below it, check v simplicial there.
bool simplicial_in_some_minimal_triangulation(const Graph& g, int v);

// All inclusion-minimal chordal fills, by subset search with pruning.
std::vector<Triangulation> enumerate_minimal_triangulations(const Graph& g, int max_n = 7);

} // namespace avo
