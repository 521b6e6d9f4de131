#include "avo/graph.hpp"

#include <algorithm>
#include <queue>

namespace avo {

namespace {
    // Above this the adjacency-matrix rows get too large; fall back to hashing.
    constexpr int kBitsetMaxN = 2048;
}

Graph::Graph(int n, std::vector<Edge> edges)
    : n_(n)
{
    if (n < 1)
        throw error("graph must have a non-empty vertex set");
    for (auto& e : edges) {
        if (e.u == e.v)
            throw error("self-loop on vertex " + std::to_string(e.u));
        if (e.u > e.v)
            std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n)
            throw error("edge endpoint out of range: {" + std::to_string(e.u) + ","
                + std::to_string(e.v) + "}");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adj_.resize(n_);
    for (const Edge& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& nb : adj_)
        std::sort(nb.begin(), nb.end());

    if (n_ <= kBitsetMaxN) {
        words_ = static_cast<std::size_t>((n_ + 63) / 64);
        bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
        for (const Edge& e : edges_) {
            bits_[static_cast<std::size_t>(e.u) * words_ + (e.v >> 6)] |= 1ull << (e.v & 63);
            bits_[static_cast<std::size_t>(e.v) * words_ + (e.u >> 6)] |= 1ull << (e.u & 63);
        }
    } else {
        edge_keys_.reserve(edges_.size() * 2);
        for (const Edge& e : edges_)
            edge_keys_.insert(key(e.u, e.v));
    }
}

bool is_induced_path(const Graph& g, std::span<const int> seq)
{
    const int k = static_cast<int>(seq.size());
    if (k < 1)
        return false;
    for (int x : seq)
        if (!g.has_vertex(x))
            return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (seq[i] == seq[j])
                return false;
            bool want = (j == i + 1);
            if (g.has_edge(seq[i], seq[j]) != want)
                return false;
        }
    return true;
}

bool is_induced_cycle(const Graph& g, std::span<const int> seq)
{
    const int k = static_cast<int>(seq.size());
    if (k < 4)
        return false;
    for (int x : seq)
        if (!g.has_vertex(x))
            return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (seq[i] == seq[j])
                return false;
            bool want = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.has_edge(seq[i], seq[j]) != want)
                return false;
        }
    return true;
}

Graph complement(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v))
                edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

LineGraphResult line_graph(const Graph& g)
{
    if (g.edge_count() == 0)
        throw error("line graph of an edgeless graph is undefined here");
    const auto& host_edges = g.edges();
    const int m = static_cast<int>(host_edges.size());

    std::vector<std::vector<int>> incident(g.vertex_count());
    for (int i = 0; i < m; ++i) {
        incident[host_edges[i].u].push_back(i);
        incident[host_edges[i].v].push_back(i);
    }
    // two distinct edges share at most one endpoint, so no duplicates arise
    std::vector<Edge> ledges;
    for (const auto& inc : incident)
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                ledges.push_back(make_edge(inc[i], inc[j]));
    return {Graph(m, std::move(ledges)), host_edges};
}

InducedSubgraphResult induced_subgraph(const Graph& g, std::span<const int> s)
{
    std::vector<int> keep(s.begin(), s.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    if (keep.empty())
        throw error("induced subgraph on an empty vertex set");
    for (int v : keep)
        if (!g.has_vertex(v))
            throw error("induced subgraph vertex out of range: " + std::to_string(v));

    std::vector<int> remap(g.vertex_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i)
        remap[keep[i]] = static_cast<int>(i);

    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (remap[e.u] >= 0 && remap[e.v] >= 0)
            edges.push_back({remap[e.u], remap[e.v]});
    return {Graph(static_cast<int>(keep.size()), std::move(edges)), std::move(keep)};
}

std::vector<int> distances_from(const Graph& g, int s)
{
    if (!g.has_vertex(s))
        throw error("source vertex out of range");
    std::vector<int> dist(g.vertex_count(), kUnreachable);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

int eccentricity(const Graph& g, int s)
{
    auto dist = distances_from(g, s);
    int ecc = 0;
    for (int d : dist) {
        if (d == kUnreachable)
            return kUnreachable;
        ecc = std::max(ecc, d);
    }
    return ecc;
}

int diameter(const Graph& g)
{
    int diam = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int ecc = eccentricity(g, v);
        if (ecc == kUnreachable)
            return kUnreachable;
        diam = std::max(diam, ecc);
    }
    return diam;
}

std::vector<std::vector<int>> connected_components(const Graph& g)
{
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[s])
            continue;
        std::vector<int> comp;
        std::queue<int> q;
        seen[s] = 1;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g)
{
    std::vector<int> color(g.vertex_count(), -1);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (color[s] >= 0)
            continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> sides;
    for (int v = 0; v < g.vertex_count(); ++v)
        (color[v] == 0 ? sides.first : sides.second).push_back(v);
    return sides;
}

} // namespace avo
