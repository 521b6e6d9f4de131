#include "avo/triangulation.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <unordered_set>

namespace avo {

namespace {

    // Word-per-row adjacency for n <= 64; the workhorse of the fill machinery.
    struct Bits {
        int n = 0;
        std::array<std::uint64_t, 64> row{};

        bool edge(int u, int v) const { return (row[u] >> v) & 1u; }
        void add(int u, int v)
        {
            row[u] |= 1ull << v;
            row[v] |= 1ull << u;
        }
        void remove(int u, int v)
        {
            row[u] &= ~(1ull << v);
            row[v] &= ~(1ull << u);
        }
    };

    Bits to_bits(const Graph& g)
    {
        Bits b;
        b.n = g.vertex_count();
        for (const Edge& e : g.edges())
            b.add(e.u, e.v);
        return b;
    }

    // Chordality via LBFS whose labels fit in one word (bit 63-step appended
    // for each visited neighbor), then the standard parent check on the
    // reversed order.
    bool bits_chordal(const Bits& b)
    {
        const int n = b.n;
        std::uint64_t unvisited = (n == 64) ? ~0ull : ((1ull << n) - 1);
        std::array<std::uint64_t, 64> label{};
        std::array<int, 64> order{};
        for (int step = 0; step < n; ++step) {
            int best = -1;
            std::uint64_t best_label = 0;
            for (std::uint64_t rem = unvisited; rem;) {
                int v = std::countr_zero(rem);
                rem &= rem - 1;
                if (best < 0 || label[v] > best_label) {
                    best = v;
                    best_label = label[v];
                }
            }
            order[step] = best;
            unvisited &= ~(1ull << best);
            const std::uint64_t mark = 1ull << (63 - step);
            for (std::uint64_t nbrs = b.row[best] & unvisited; nbrs;) {
                int w = std::countr_zero(nbrs);
                nbrs &= nbrs - 1;
                label[w] |= mark;
            }
        }

        std::array<int, 64> apos{};
        for (int i = 0; i < n; ++i)
            apos[order[i]] = n - 1 - i;
        std::array<std::uint64_t, 64> prow{};
        for (int v = 0; v < n; ++v) {
            std::uint64_t pr = 0;
            for (std::uint64_t r = b.row[v]; r;) {
                int w = std::countr_zero(r);
                r &= r - 1;
                pr |= 1ull << apos[w];
            }
            prow[apos[v]] = pr;
        }
        for (int i = 0; i < n; ++i) {
            std::uint64_t later = (i + 1 < 64) ? ((prow[i] >> (i + 1)) << (i + 1)) : 0;
            if (!later)
                continue;
            int j = std::countr_zero(later);
            if ((later & ~(1ull << j) & ~prow[j]) != 0)
                return false;
        }
        return true;
    }

    std::vector<Edge> bits_edges(const Bits& b)
    {
        std::vector<Edge> out;
        for (int u = 0; u < b.n; ++u)
            for (std::uint64_t r = b.row[u] >> (u + 1) << (u + 1); r;) {
                int v = std::countr_zero(r);
                r &= r - 1;
                out.push_back({u, v});
            }
        std::sort(out.begin(), out.end());
        return out;
    }

    Graph graph_minus_edge(const Graph& g, Edge f)
    {
        std::vector<Edge> edges;
        edges.reserve(g.edges().size());
        for (const Edge& e : g.edges())
            if (!(e == f))
                edges.push_back(e);
        return Graph(g.vertex_count(), std::move(edges));
    }

} // namespace

Triangulation::Triangulation(Graph base_graph, std::vector<Edge> fill_edges)
    : base(std::move(base_graph))
{
    for (auto& e : fill_edges) {
        e = make_edge(e.u, e.v);
        if (!base.has_vertex(e.u) || !base.has_vertex(e.v))
            throw error("fill edge endpoint out of range");
        if (base.has_edge(e.u, e.v))
            throw error("fill edge already present in the base graph");
    }
    std::sort(fill_edges.begin(), fill_edges.end());
    fill_edges.erase(std::unique(fill_edges.begin(), fill_edges.end()), fill_edges.end());
    fill = std::move(fill_edges);
}

Graph Triangulation::filled() const
{
    std::vector<Edge> edges(base.edges());
    edges.insert(edges.end(), fill.begin(), fill.end());
    return Graph(base.vertex_count(), std::move(edges));
}

std::vector<Edge> deficiency(const Graph& g, int v)
{
    if (!g.has_vertex(v))
        throw error("vertex out of range");
    const auto& nb = g.neighbors(v);
    std::vector<Edge> out;
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!g.has_edge(nb[i], nb[j]))
                out.push_back(make_edge(nb[i], nb[j]));
    std::sort(out.begin(), out.end());
    return out;
}

Triangulation elimination_fill(const Graph& g, const VertexOrdering& sigma)
{
    const int n = g.vertex_count();
    if (sigma.size() != n)
        throw error("ordering length must equal the vertex count");

    std::vector<Edge> fill;
    if (n <= 64) {
        Bits b = to_bits(g);
        std::uint64_t alive = (n == 64) ? ~0ull : ((1ull << n) - 1);
        for (int v : sigma.sequence) {
            const std::uint64_t nbrs = b.row[v] & alive & ~(1ull << v);
            for (std::uint64_t ri = nbrs; ri;) {
                int u = std::countr_zero(ri);
                ri &= ri - 1;
                for (std::uint64_t rj = ri; rj;) {
                    int w = std::countr_zero(rj);
                    rj &= rj - 1;
                    if (!b.edge(u, w)) {
                        b.add(u, w);
                        fill.push_back({u, w});
                    }
                }
            }
            alive &= ~(1ull << v);
        }
    } else {
        std::vector<std::unordered_set<int>> adj(n);
        for (const Edge& e : g.edges()) {
            adj[e.u].insert(e.v);
            adj[e.v].insert(e.u);
        }
        std::vector<char> alive(n, 1);
        for (int v : sigma.sequence) {
            std::vector<int> nbrs;
            for (int w : adj[v])
                if (alive[w])
                    nbrs.push_back(w);
            std::sort(nbrs.begin(), nbrs.end());
            for (std::size_t i = 0; i < nbrs.size(); ++i)
                for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                    if (!adj[nbrs[i]].count(nbrs[j])) {
                        adj[nbrs[i]].insert(nbrs[j]);
                        adj[nbrs[j]].insert(nbrs[i]);
                        fill.push_back({nbrs[i], nbrs[j]});
                    }
            alive[v] = 0;
        }
    }
    return Triangulation(g, std::move(fill));
}

ChordalityResult is_chordal(const Graph& g)
{
    const int n = g.vertex_count();
    auto sigma = lbfs(g);
    std::vector<int> apos(n);
    for (int i = 0; i < n; ++i)
        apos[sigma.sequence[i]] = n - 1 - i;

    for (int v = 0; v < n; ++v) {
        int parent = -1;
        int ppos = n;
        for (int w : g.neighbors(v))
            if (apos[w] > apos[v] && apos[w] < ppos) {
                ppos = apos[w];
                parent = w;
            }
        if (parent < 0)
            continue;
        for (int w : g.neighbors(v))
            if (apos[w] > apos[v] && w != parent && !g.has_edge(parent, w))
                return {false, std::nullopt};
    }
    std::vector<int> alpha(n);
    for (int i = 0; i < n; ++i)
        alpha[i] = sigma.sequence[n - 1 - i];
    return {true, VertexOrdering::from_sequence(std::move(alpha))};
}

bool is_minimal_triangulation(const Triangulation& t)
{
    const int n = t.base.vertex_count();
    if (n <= 64) {
        Bits b = to_bits(t.base);
        for (const Edge& e : t.fill)
            b.add(e.u, e.v);
        if (!bits_chordal(b))
            throw error("filled graph is not chordal");
        for (const Edge& f : t.fill) {
            b.remove(f.u, f.v);
            bool ok = bits_chordal(b);
            b.add(f.u, f.v);
            if (ok)
                return false;
        }
        return true;
    }
    Graph filled = t.filled();
    if (!is_chordal(filled).chordal)
        throw error("filled graph is not chordal");
    for (const Edge& f : t.fill)
        if (is_chordal(graph_minus_edge(filled, f)).chordal)
            return false;
    return true;
}

Triangulation minimal_triangulation_below(const Graph& g, const Graph& h)
{
    const int n = g.vertex_count();
    if (h.vertex_count() != n)
        throw error("supergraph must have the same vertex set");
    for (const Edge& e : g.edges())
        if (!h.has_edge(e.u, e.v))
            throw error("supergraph must contain every base edge");
    if (!is_chordal(h).chordal)
        throw error("supergraph must be chordal");

    std::vector<Edge> fill;
    for (const Edge& e : h.edges())
        if (!g.has_edge(e.u, e.v))
            fill.push_back(e);

    if (n <= 64) {
        Bits b = to_bits(h);
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<Edge> keep;
            for (const Edge& f : fill) {
                b.remove(f.u, f.v);
                if (bits_chordal(b)) {
                    changed = true;
                } else {
                    b.add(f.u, f.v);
                    keep.push_back(f);
                }
            }
            fill = std::move(keep);
        }
        return Triangulation(g, std::move(fill));
    }

    Graph current = h;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Edge> keep;
        for (const Edge& f : fill) {
            Graph candidate = graph_minus_edge(current, f);
            if (is_chordal(candidate).chordal) {
                current = std::move(candidate);
                changed = true;
            } else {
                keep.push_back(f);
            }
        }
        fill = std::move(keep);
    }
    return Triangulation(g, std::move(fill));
}

bool simplicial_in_some_minimal_triangulation(const Graph& g, int v)
{
    if (!g.has_vertex(v))
        throw error("vertex out of range");
    const int n = g.vertex_count();
    std::vector<Edge> edges(g.edges());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (a != v && b != v && !g.has_edge(a, b))
                edges.push_back({a, b});
    Graph star_completion(n, std::move(edges));
    Triangulation t = minimal_triangulation_below(g, star_completion);
    return is_simplicial_vertex(t.filled(), v);
}

namespace {

    void enumerate_rec(Bits& b, const std::vector<Edge>& nonedges, std::size_t from,
        std::vector<Edge>& current, std::vector<std::vector<Edge>>& found)
    {
        if (bits_chordal(b)) {
            found.push_back(current); // supersets cannot be minimal
            return;
        }
        for (std::size_t j = from; j < nonedges.size(); ++j) {
            const Edge& e = nonedges[j];
            b.add(e.u, e.v);
            current.push_back(e);
            enumerate_rec(b, nonedges, j + 1, current, found);
            current.pop_back();
            b.remove(e.u, e.v);
        }
    }

} // namespace

std::vector<Triangulation> enumerate_minimal_triangulations(const Graph& g, int max_n)
{
    const int n = g.vertex_count();
    if (n > max_n)
        throw bound_error("graph too large for minimal triangulation enumeration");
    if (n > 64)
        throw bound_error("minimal triangulation enumeration supports at most 64 vertices");

    std::vector<Edge> nonedges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v))
                nonedges.push_back({u, v});

    Bits b = to_bits(g);
    std::vector<Edge> current;
    std::vector<std::vector<Edge>> found;
    enumerate_rec(b, nonedges, 0, current, found);

    // keep the inclusion-minimal fills only
    auto contains = [](const std::vector<Edge>& big, const std::vector<Edge>& small) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };
    std::vector<Triangulation> out;
    for (std::size_t i = 0; i < found.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < found.size() && minimal; ++j)
            if (j != i && found[j].size() < found[i].size() && contains(found[i], found[j]))
                minimal = false;
        if (minimal)
            out.emplace_back(g, found[i]);
    }
    return out;
}

} // namespace avo
