#pragma once

#include "avo/graph.hpp"

#include <cstdint>

namespace avo {

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);
Graph make_circulant(int n, const std::vector<int>& steps);
Graph make_petersen();

// G(n, p) with a skip-sampling pass, O(n + m); deterministic in the seed.
Graph random_graph(int n, double p, std::uint64_t seed);

// Random tree of cliques: every vertex is simplicial when added, so the
// result is chordal. density in [0,1] controls how much of the chosen
// clique each new vertex attaches to.
Graph random_chordal(int n, double density, std::uint64_t seed);

// Labeled graph on n vertices selected by one bit per pair; pair order is
// (0,1),(0,2),...,(0,n-1),(1,2),... There are 2^pair_count(n) such graphs.
std::uint64_t pair_count(int n);
Graph graph_from_pair_mask(int n, std::uint64_t mask);

} // namespace avo
