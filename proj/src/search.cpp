#include "avo/search.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_map>

namespace avo {

VertexOrdering VertexOrdering::from_sequence(std::vector<int> seq)
{
    const int n = static_cast<int>(seq.size());
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        if (seq[i] < 0 || seq[i] >= n || pos[seq[i]] != -1)
            throw error("sequence is not a permutation of 0..n-1");
        pos[seq[i]] = i;
    }
    return {std::move(seq), std::move(pos)};
}

namespace {

    // Doubly linked vertex lists grouped into a doubly linked chain of
    // classes, ordered by label rank. Every class keeps its members in
    // ascending id order, so the head of the first class is the smallest
    // eligible vertex.
    struct Refiner {
        struct Cls {
            int head = -1, tail = -1;
            int prev = -1, next = -1;
            int stamp = -1, split = -1;
        };

        explicit Refiner(int n)
            : vprev(n, -1)
            , vnext(n, -1)
            , vclass(n, -1)
        {
            classes.reserve(static_cast<std::size_t>(n) + 8);
        }

        std::vector<int> vprev, vnext, vclass;
        std::vector<Cls> classes;
        int first = -1;

        int new_class()
        {
            classes.push_back({});
            return static_cast<int>(classes.size()) - 1;
        }

        void append(int c, int v)
        {
            vclass[v] = c;
            vprev[v] = classes[c].tail;
            vnext[v] = -1;
            if (classes[c].tail != -1)
                vnext[classes[c].tail] = v;
            else
                classes[c].head = v;
            classes[c].tail = v;
        }

        void detach(int v)
        {
            int c = vclass[v];
            if (vprev[v] != -1)
                vnext[vprev[v]] = vnext[v];
            else
                classes[c].head = vnext[v];
            if (vnext[v] != -1)
                vprev[vnext[v]] = vprev[v];
            else
                classes[c].tail = vprev[v];
        }

        void unlink_class(int c)
        {
            if (classes[c].prev != -1)
                classes[classes[c].prev].next = classes[c].next;
            else
                first = classes[c].next;
            if (classes[c].next != -1)
                classes[classes[c].next].prev = classes[c].prev;
        }

        void link_before(int d, int c)
        {
            classes[d].prev = classes[c].prev;
            classes[d].next = c;
            if (classes[c].prev != -1)
                classes[classes[c].prev].next = d;
            else
                first = d;
            classes[c].prev = d;
        }
    };

} // namespace

VertexOrdering lbfs(const Graph& g, std::optional<int> start)
{
    const int n = g.vertex_count();
    if (start && !g.has_vertex(*start))
        throw error("start vertex out of range");

    Refiner r(n);
    int rest = r.new_class();
    r.first = rest;
    if (start) {
        int head = r.new_class();
        r.link_before(head, rest);
        r.append(head, *start);
    }
    for (int v = 0; v < n; ++v)
        if (!start || v != *start)
            r.append(rest, v);
    if (start && n == 1)
        r.unlink_class(rest); // empty remainder

    std::vector<int> seq;
    seq.reserve(n);
    std::vector<char> numbered(n, 0);
    for (int i = 0; i < n; ++i) {
        int c = r.first;
        int v = r.classes[c].head;
        r.detach(v);
        if (r.classes[c].head == -1)
            r.unlink_class(c);
        numbered[v] = 1;
        seq.push_back(v);

        for (int w : g.neighbors(v)) {
            if (numbered[w])
                continue;
            int cw = r.vclass[w];
            if (r.classes[cw].stamp != i) {
                int d = r.new_class();
                r.link_before(d, cw);
                r.classes[cw].stamp = i;
                r.classes[cw].split = d;
            }
            int d = r.classes[cw].split;
            r.detach(w);
            r.append(d, w);
            if (r.classes[cw].head == -1)
                r.unlink_class(cw);
        }
    }
    return VertexOrdering::from_sequence(std::move(seq));
}

VertexOrdering mcs(const Graph& g, std::optional<int> start)
{
    const int n = g.vertex_count();
    if (start && !g.has_vertex(*start))
        throw error("start vertex out of range");

    std::vector<std::set<int>> bucket(n);
    std::vector<int> count(n, 0);
    std::vector<char> numbered(n, 0);
    for (int v = 0; v < n; ++v)
        bucket[0].insert(v);
    int maxc = 0;

    std::vector<int> seq;
    seq.reserve(n);
    for (int i = 0; i < n; ++i) {
        int v;
        if (i == 0 && start) {
            v = *start;
        } else {
            while (bucket[maxc].empty())
                --maxc;
            v = *bucket[maxc].begin();
        }
        bucket[count[v]].erase(v);
        numbered[v] = 1;
        seq.push_back(v);
        for (int w : g.neighbors(v)) {
            if (numbered[w])
                continue;
            bucket[count[w]].erase(w);
            ++count[w];
            bucket[count[w]].insert(w);
            maxc = std::max(maxc, count[w]);
        }
    }
    return VertexOrdering::from_sequence(std::move(seq));
}

namespace {

    using Partition = std::vector<std::vector<int>>;

    Partition split_partition(const Partition& part, const Graph& g, int v)
    {
        Partition out;
        for (const auto& cls : part) {
            std::vector<int> hit, miss;
            for (int w : cls) {
                if (w == v)
                    continue;
                (g.has_edge(v, w) ? hit : miss).push_back(w);
            }
            if (!hit.empty())
                out.push_back(std::move(hit));
            if (!miss.empty())
                out.push_back(std::move(miss));
        }
        return out;
    }

    void lbfs_ends_rec(const Graph& g, const Partition& part,
        std::map<Partition, std::set<int>>& memo, std::set<int>& out)
    {
        if (part.size() == 1 && part[0].size() == 1) {
            out.insert(part[0][0]);
            return;
        }
        auto it = memo.find(part);
        if (it != memo.end()) {
            out.insert(it->second.begin(), it->second.end());
            return;
        }
        std::set<int> local;
        for (int v : part.front()) {
            Partition next = split_partition(part, g, v);
            lbfs_ends_rec(g, next, memo, local);
        }
        memo.emplace(part, local);
        out.insert(local.begin(), local.end());
    }

} // namespace

std::vector<int> lbfs_all_end_vertices(const Graph& g, int max_n)
{
    const int n = g.vertex_count();
    if (n > max_n)
        throw bound_error("graph too large for exhaustive LBFS enumeration");
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v)
        all[v] = v;
    Partition init = {all};
    std::map<Partition, std::set<int>> memo;
    std::set<int> ends;
    lbfs_ends_rec(g, init, memo, ends);
    return {ends.begin(), ends.end()};
}

namespace {

    void mcs_ends_rec(const Graph& g, std::uint32_t mask, int n,
        const std::vector<std::uint32_t>& adj,
        std::unordered_map<std::uint32_t, std::set<int>>& memo, std::set<int>& out)
    {
        const int numbered = static_cast<int>(std::popcount(mask));
        if (numbered == n - 1) {
            for (int v = 0; v < n; ++v)
                if (!(mask & (1u << v)))
                    out.insert(v);
            return;
        }
        auto it = memo.find(mask);
        if (it != memo.end()) {
            out.insert(it->second.begin(), it->second.end());
            return;
        }
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!(mask & (1u << v)))
                best = std::max(best, static_cast<int>(std::popcount(adj[v] & mask)));
        std::set<int> local;
        for (int v = 0; v < n; ++v) {
            if (mask & (1u << v))
                continue;
            if (static_cast<int>(std::popcount(adj[v] & mask)) != best)
                continue;
            mcs_ends_rec(g, mask | (1u << v), n, adj, memo, local);
        }
        memo.emplace(mask, local);
        out.insert(local.begin(), local.end());
    }

} // namespace

std::vector<int> mcs_all_end_vertices(const Graph& g, int max_n)
{
    const int n = g.vertex_count();
    if (n > max_n || n > 31)
        throw bound_error("graph too large for exhaustive MCS enumeration");
    if (n == 1)
        return {0};
    std::vector<std::uint32_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    std::unordered_map<std::uint32_t, std::set<int>> memo;
    std::set<int> ends;
    mcs_ends_rec(g, 0, n, adj, memo, ends);
    return {ends.begin(), ends.end()};
}

std::pair<int, int> two_avoidable(const Graph& g)
{
    if (g.vertex_count() < 2)
        throw error("need at least two vertices");
    int a = lbfs(g).sequence.back();
    int b = lbfs(g, a).sequence.back();
    return {a, b};
}

DiametralPair diametral_avoidable_pair(const Graph& g)
{
    if (g.vertex_count() < 2)
        throw error("need at least two vertices");
    int best = -1, best_ecc = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int ecc = eccentricity(g, v);
        if (ecc == kUnreachable)
            throw error("graph must be connected");
        if (ecc > best_ecc) {
            best_ecc = ecc;
            best = v;
        }
    }
    int a = lbfs(g, best).sequence.back();
    int b = lbfs(g, a).sequence.back();
    return {a, b, distances_from(g, a)[b]};
}

} // namespace avo
