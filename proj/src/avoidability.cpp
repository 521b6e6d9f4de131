#include "avo/avoidability.hpp"

#include <algorithm>
#include <queue>

namespace avo {

bool is_simplicial_vertex(const Graph& g, int v)
{
    if (!g.has_vertex(v))
        throw error("vertex out of range");
    const auto& nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!g.has_edge(nb[i], nb[j]))
                return false;
    return true;
}

namespace {

    // Candidates attachable at one end: adjacent to `end`, non-adjacent to
    // every other path vertex.
    std::vector<int> end_candidates(const Graph& g, const std::vector<int>& path, int end)
    {
        std::vector<int> out;
        for (int x : g.neighbors(end)) {
            bool ok = true;
            for (int q : path)
                if (q != end && (q == x || g.has_edge(x, q))) {
                    ok = false;
                    break;
                }
            if (ok && x != end)
                out.push_back(x);
        }
        return out;
    }

} // namespace

std::vector<InducedPath> extensions(const Graph& g, const InducedPath& p)
{
    if (!is_induced_path(g, p.vertices))
        throw error("not an induced path of the host graph");
    const auto& path = p.vertices;
    const int front = path.front();
    const int back = path.back();
    auto xs = end_candidates(g, path, front);
    auto ys = end_candidates(g, path, back);

    std::vector<InducedPath> out;
    const bool palindrome = (path.size() == 1);
    for (int x : xs)
        for (int y : ys) {
            if (x == y || g.has_edge(x, y))
                continue;
            if (palindrome && x > y)
                continue; // (x,v,y) and (y,v,x) are the same path
            InducedPath ext;
            ext.vertices.reserve(path.size() + 2);
            ext.vertices.push_back(x);
            ext.vertices.insert(ext.vertices.end(), path.begin(), path.end());
            ext.vertices.push_back(y);
            out.push_back(std::move(ext));
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::vector<int>> close_extension(const Graph& g, const InducedPath& p)
{
    const auto& path = p.vertices;
    if (path.size() < 3)
        throw error("closability needs a path on at least 3 vertices");
    if (!is_induced_path(g, path))
        throw error("not an induced path of the host graph");

    const int x = path.front();
    const int y = path.back();
    std::vector<char> allowed(g.vertex_count(), 1);
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        int w = path[i];
        allowed[w] = 0;
        for (int nb : g.neighbors(w))
            allowed[nb] = 0;
    }
    allowed[x] = allowed[y] = 1;

    std::vector<int> parent(g.vertex_count(), -2);
    std::queue<int> q;
    parent[x] = -1;
    q.push(x);
    while (!q.empty() && parent[y] == -2) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (allowed[w] && parent[w] == -2) {
                parent[w] = v;
                q.push(w);
            }
    }
    if (parent[y] == -2)
        return std::nullopt;

    std::vector<int> connector; // interior of the x..y residual path
    for (int v = parent[y]; v != x; v = parent[v])
        connector.push_back(v);
    // connector runs y-side first; the cycle continues from y back to x
    std::vector<int> cycle(path);
    cycle.insert(cycle.end(), connector.begin(), connector.end());
    return cycle;
}

std::pair<bool, ClosabilityCertificate> is_avoidable_path(const Graph& g, const InducedPath& p)
{
    auto exts = extensions(g, p);
    ClosabilityCertificate cert;
    for (const auto& ext : exts) {
        auto cycle = close_extension(g, ext);
        if (!cycle) {
            cert.failure_witness = ext;
            return {false, std::move(cert)};
        }
        if (!cert.extension) {
            cert.extension = ext;
            cert.cycle = std::move(cycle);
        }
    }
    return {true, std::move(cert)};
}

bool is_avoidable_vertex(const Graph& g, int v)
{
    if (!g.has_vertex(v))
        throw error("vertex out of range");
    const auto& nb = g.neighbors(v);
    if (nb.size() <= 1)
        return true;

    // Components of G - N[v]; two nonadjacent neighbors x, y must both see a
    // common component to be joined by a path avoiding N[v].
    const int n = g.vertex_count();
    std::vector<char> removed(n, 0);
    removed[v] = 1;
    for (int w : nb)
        removed[w] = 1;
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (removed[s] || comp[s] >= 0)
            continue;
        std::queue<int> q;
        comp[s] = ncomp;
        q.push(s);
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            for (int b : g.neighbors(a))
                if (!removed[b] && comp[b] < 0) {
                    comp[b] = ncomp;
                    q.push(b);
                }
        }
        ++ncomp;
    }

    const std::size_t words = static_cast<std::size_t>((ncomp + 63) / 64);
    std::vector<std::uint64_t> masks(nb.size() * std::max<std::size_t>(words, 1), 0);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (int w : g.neighbors(nb[i]))
            if (comp[w] >= 0)
                masks[i * words + (comp[w] >> 6)] |= 1ull << (comp[w] & 63);

    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
            if (g.has_edge(nb[i], nb[j]))
                continue;
            bool joined = false;
            for (std::size_t k = 0; k < words && !joined; ++k)
                joined = (masks[i * words + k] & masks[j * words + k]) != 0;
            if (!joined)
                return false;
        }
    return true;
}

std::vector<int> avoidable_vertices(const Graph& g)
{
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (is_avoidable_vertex(g, v))
            out.push_back(v);
    return out;
}

bool is_avoidable_edge(const Graph& g, Edge e)
{
    if (!g.has_edge(e.u, e.v))
        throw error("edge not present in graph");
    return is_avoidable_path(g, InducedPath{{e.u, e.v}}).first;
}

std::vector<Edge> avoidable_edges(const Graph& g)
{
    std::vector<Edge> out;
    for (const Edge& e : g.edges())
        if (is_avoidable_edge(g, e))
            out.push_back(e);
    return out;
}

bool is_pseudo_avoidable_edge(const Graph& g, Edge e)
{
    if (!g.has_edge(e.u, e.v))
        throw error("edge not present in graph");
    auto lg = line_graph(g);
    Edge canon = make_edge(e.u, e.v);
    auto it = std::lower_bound(lg.vertex_edges.begin(), lg.vertex_edges.end(), canon);
    int idx = static_cast<int>(it - lg.vertex_edges.begin());
    return is_avoidable_vertex(lg.graph, idx);
}

bool is_bisimplicial_edge(const Graph& g, Edge e)
{
    if (!g.has_edge(e.u, e.v))
        throw error("edge not present in graph");
    std::vector<int> s(g.neighbors(e.u));
    s.insert(s.end(), g.neighbors(e.v).begin(), g.neighbors(e.v).end());
    auto sub = induced_subgraph(g, s);
    auto sides = bipartition(sub.graph);
    if (!sides)
        return false;
    const std::uint64_t a = sides->first.size();
    const std::uint64_t b = sides->second.size();
    return a * b == static_cast<std::uint64_t>(sub.graph.edge_count());
}

bool closed_neighborhood_is_pmc(const Graph& g, int v)
{
    return is_avoidable_vertex(g, v);
}

bool path_closes_to_cycle(const Graph& g, std::span<const int> path)
{
    if (path.size() < 3)
        throw error("path closure needs at least 3 vertices");
    std::vector<char> seen(g.vertex_count(), 0);
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (!g.has_vertex(path[i]) || seen[path[i]])
            throw error("not a path of distinct vertices");
        seen[path[i]] = 1;
        if (i + 1 < path.size() && !g.has_edge(path[i], path[i + 1]))
            throw error("consecutive path vertices must be adjacent");
    }
    // a closing cycle exists iff the endpoints stay connected once the
    // interior is removed
    std::vector<char> blocked(g.vertex_count(), 0);
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
        blocked[path[i]] = 1;
    const int x = path.front();
    const int y = path.back();
    std::vector<char> vis(g.vertex_count(), 0);
    std::queue<int> q;
    vis[x] = 1;
    q.push(x);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (v == y)
            return true;
        for (int w : g.neighbors(v))
            if (!blocked[w] && !vis[w]) {
                vis[w] = 1;
                q.push(w);
            }
    }
    return false;
}

} // namespace avo
