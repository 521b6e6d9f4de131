#include "avo/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace avo {

Graph make_path(int n)
{
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

Graph make_cycle(int n)
{
    if (n < 3)
        throw error("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1});
    edges.push_back({0, n - 1});
    return Graph(n, std::move(edges));
}

Graph make_complete(int n)
{
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph make_complete_bipartite(int a, int b)
{
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            edges.push_back({u, a + v});
    return Graph(a + b, std::move(edges));
}

Graph make_circulant(int n, const std::vector<int>& steps)
{
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        for (int s : steps) {
            if (s <= 0 || s >= n)
                throw error("circulant step out of range");
            edges.push_back(make_edge(v, (v + s) % n));
        }
    return Graph(n, std::move(edges));
}

Graph make_petersen()
{
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back(make_edge(i, (i + 1) % 5));          // outer 5-cycle
        edges.push_back(make_edge(i, i + 5));                // spokes
        edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));  // inner pentagram
    }
    return Graph(10, std::move(edges));
}

Graph random_graph(int n, double p, std::uint64_t seed)
{
    if (n < 1)
        throw error("graph must have a non-empty vertex set");
    if (p <= 0.0)
        return Graph(n);
    if (p >= 1.0)
        return make_complete(n);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Edge> edges;
    const double logq = std::log(1.0 - p);
    // Batagelj-Brandes geometric skipping over the pair sequence
    long long v = 1, w = -1;
    while (v < n) {
        double r = unit(rng);
        w += 1 + static_cast<long long>(std::floor(std::log(1.0 - r) / logq));
        while (w >= v && v < n) {
            w -= v;
            v += 1;
        }
        if (v < n)
            edges.push_back({static_cast<int>(w), static_cast<int>(v)});
    }
    return Graph(n, std::move(edges));
}

Graph random_chordal(int n, double density, std::uint64_t seed)
{
    if (n < 1)
        throw error("graph must have a non-empty vertex set");
    density = std::min(1.0, std::max(0.0, density));
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> cliques = {{0}};
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) {
        const auto& base = cliques[std::uniform_int_distribution<std::size_t>(
            0, cliques.size() - 1)(rng)];
        int want = std::max(1, static_cast<int>(std::llround(density * base.size())));
        want = std::min<int>(want, static_cast<int>(base.size()));
        std::vector<int> pick(base);
        std::shuffle(pick.begin(), pick.end(), rng);
        pick.resize(want);
        for (int u : pick)
            edges.push_back(make_edge(u, v));
        pick.push_back(v);
        cliques.push_back(std::move(pick));
    }
    return Graph(n, std::move(edges));
}

std::uint64_t pair_count(int n)
{
    return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

Graph graph_from_pair_mask(int n, std::uint64_t mask)
{
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask & (1ull << bit))
                edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

} // namespace avo
