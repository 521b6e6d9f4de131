#pragma once

#include "avo/graph.hpp"

#include <optional>

namespace avo {

// Evidence attached to an avoidability verdict. For a positive verdict with
// at least one extension, `extension` is the lexicographically smallest one
// and `cycle` an induced cycle containing it. For a negative verdict,
// `failure_witness` is the lexicographically smallest extension that closes
// to no induced cycle. A simplicial path yields an empty certificate.
struct ClosabilityCertificate {
    std::optional<InducedPath> extension;
    std::optional<std::vector<int>> cycle;
    std::optional<InducedPath> failure_witness;
};

bool is_simplicial_vertex(const Graph& g, int v);

// All induced paths x-p-y obtained by adding one edge at each end of p,
// sorted lexicographically. Empty exactly when p is simplicial.
std::vector<InducedPath> extensions(const Graph& g, const InducedPath& p);

// Induced cycle containing p as a contiguous subsequence, if one exists.
// Criterion: delete the closed neighborhoods of p's internal vertices
// (keeping the endpoints); p closes iff the endpoints stay connected, and a
// shortest residual path completes the cycle. Requires |p| >= 3.
std::optional<std::vector<int>> close_extension(const Graph& g, const InducedPath& p);

std::pair<bool, ClosabilityCertificate> is_avoidable_path(const Graph& g, const InducedPath& p);

bool is_avoidable_vertex(const Graph& g, int v);
std::vector<int> avoidable_vertices(const Graph& g);

bool is_avoidable_edge(const Graph& g, Edge e);
std::vector<Edge> avoidable_edges(const Graph& g);

// True iff the vertex standing for e in the line graph is avoidable there.
bool is_pseudo_avoidable_edge(const Graph& g, Edge e);

// True iff N(u) ∪ N(v) (which contains u and v) induces a complete
// bipartite graph.
bool is_bisimplicial_edge(const Graph& g, Edge e);

// N[v] is a potential maximal clique exactly when v is avoidable.
bool closed_neighborhood_is_pmc(const Graph& g, int v);

// Walk-path closure: true iff some cycle (not necessarily induced) contains
// the given path of distinct, consecutively adjacent vertices. Needs at
// least 3 vertices.
bool path_closes_to_cycle(const Graph& g, std::span<const int> path);

} // namespace avo
