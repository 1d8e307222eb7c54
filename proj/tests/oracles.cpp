#include "oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace oracle {

using dim2::Digraph;
using dim2::Edge;
using dim2::LinearOrder;
using dim2::VertexId;
using dim2::VertexTable;

namespace {

std::vector<char> reach_matrix(const Digraph& g) {
    std::size_t n = g.vertex_count();
    std::vector<char> r(n * n, 0);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v : g.successors(u))
            r[u * n + v] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (r[i * n + k])
                for (std::size_t j = 0; j < n; ++j)
                    if (r[k * n + j])
                        r[i * n + j] = 1;
    return r;
}

VertexTable fresh_table(std::size_t n) {
    VertexTable t;
    for (std::size_t i = 0; i < n; ++i)
        t.intern("v" + std::to_string(i));
    return t;
}

} // namespace

Digraph closure(const Digraph& g) {
    std::size_t n = g.vertex_count();
    std::vector<char> r = reach_matrix(g);
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v)
            if (u != v && r[u * n + v])
                edges.push_back({u, v});
    return Digraph(g.vertices(), std::move(edges));
}

namespace {

// Branch-and-prune over pair orientations. dir[k]: -1 open, 0 lo->hi, 1 hi->lo.
struct OrientSearch {
    const Digraph& g;
    std::vector<Edge> pairs;
    std::vector<int> dir;
    std::vector<Edge> assigned;
    std::unordered_map<std::uint64_t, std::size_t> slot;

    explicit OrientSearch(const Digraph& graph) : g(graph) {
        for (VertexId a = 0; a < g.vertex_count(); ++a)
            for (VertexId b : g.successors(a))
                if (a < b) {
                    slot.emplace((std::uint64_t{a} << 32) | b, pairs.size());
                    pairs.push_back({a, b});
                }
        dir.assign(pairs.size(), -1);
    }

    bool adjacent(VertexId u, VertexId v) const {
        return g.has_edge(u, v) || g.has_edge(v, u);
    }

    bool assigned_as(VertexId u, VertexId v) const {
        VertexId lo = std::min(u, v), hi = std::max(u, v);
        auto it = slot.find((std::uint64_t{lo} << 32) | hi);
        if (it == slot.end())
            return false;
        int d = dir[it->second];
        if (d < 0)
            return false;
        return (d == 0) == (u == lo);
    }

    // A fresh edge x->y is consistent iff no assigned edge chains with it
    // into a missing or oppositely oriented pair.
    bool consistent(Edge ne) const {
        for (const Edge& e : assigned) {
            if (ne.head == e.tail && ne.tail != e.head) {
                if (!adjacent(ne.tail, e.head) || assigned_as(e.head, ne.tail))
                    return false;
            }
            if (e.head == ne.tail && e.tail != ne.head) {
                if (!adjacent(e.tail, ne.head) || assigned_as(ne.head, e.tail))
                    return false;
            }
        }
        return true;
    }

    bool search(std::size_t k) {
        if (k == pairs.size())
            return true;
        auto [a, b] = pairs[k];
        for (int d : {0, 1}) {
            Edge ne = d == 0 ? Edge{a, b} : Edge{b, a};
            if (!consistent(ne))
                continue;
            dir[k] = d;
            assigned.push_back(ne);
            if (search(k + 1))
                return true;
            assigned.pop_back();
            dir[k] = -1;
        }
        return false;
    }
};

} // namespace

bool has_transitive_orientation(const Digraph& undirected) {
    OrientSearch s(undirected);
    return s.search(0);
}

bool is_two_dimensional(const Digraph& g) {
    // Complement pairs assembled by hand rather than via the library.
    std::size_t n = g.vertex_count();
    std::vector<Edge> pairs;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = 0; b < n; ++b)
            if (a != b && !g.has_edge(a, b) && !g.has_edge(b, a))
                pairs.push_back({a, b});
    return has_transitive_orientation(Digraph(g.vertices(), std::move(pairs)));
}

std::vector<VertexId> complement_merge(const Digraph& g, const LinearOrder& l_h) {
    std::size_t n = g.vertex_count();
    // H: complement pairs oriented earlier-rank -> later-rank.
    Digraph h = [&] {
        std::vector<Edge> edges;
        for (VertexId a = 0; a < n; ++a)
            for (VertexId b = 0; b < n; ++b)
                if (a != b && !g.has_edge(a, b) && !g.has_edge(b, a) &&
                    l_h.rank(a) < l_h.rank(b))
                    edges.push_back({a, b});
        return Digraph(g.vertices(), std::move(edges));
    }();
    std::vector<char> tch = reach_matrix(h);

    // Relation to linearize: kept edges of g plus all of tc(H).
    std::vector<std::size_t> indeg(n, 0);
    std::vector<std::vector<VertexId>> succ(n);
    auto add = [&](VertexId u, VertexId v) {
        succ[u].push_back(v);
        ++indeg[v];
    };
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v : g.successors(u))
            if (!tch[u * n + v] && !tch[v * n + u])
                add(u, v);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v)
            if (u != v && tch[u * n + v])
                add(u, v);

    std::vector<char> emitted(n, 0);
    std::vector<VertexId> out;
    for (std::size_t step = 0; step < n; ++step) {
        VertexId source = 0;
        std::size_t sources = 0;
        for (VertexId v = 0; v < n; ++v)
            if (!emitted[v] && indeg[v] == 0) {
                ++sources;
                source = v;
            }
        if (sources != 1)
            throw std::logic_error("reference merge: order is not unique (" +
                                   std::to_string(sources) + " sources)");
        emitted[source] = 1;
        out.push_back(source);
        for (VertexId w : succ[source])
            --indeg[w];
    }
    return out;
}

namespace {

bool transitive_matrix(const Digraph& g) {
    std::size_t n = g.vertex_count();
    std::vector<char> adj(n * n, 0);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v : g.successors(u))
            adj[u * n + v] = 1;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = 0; b < n; ++b)
            if (a != b && adj[a * n + b])
                for (VertexId c = 0; c < n; ++c)
                    if (c != b && c != a && adj[b * n + c] && !adj[a * n + c])
                        return false;
    return true;
}

} // namespace

std::vector<std::vector<Edge>> locally_maximal_2d(const Digraph& g) {
    std::vector<Edge> all = g.edges();
    std::size_t m = all.size();
    if (m > 16)
        throw std::logic_error("reference enumeration: too many edges");
    std::vector<std::vector<Edge>> feasible;
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<Edge> subset;
        for (std::size_t b = 0; b < m; ++b)
            if (mask & (std::size_t{1} << b))
                subset.push_back(all[b]);
        Digraph cand(g.vertices(), subset);
        if (!transitive_matrix(cand) || !is_two_dimensional(cand))
            continue;
        feasible.push_back(std::move(subset));
    }
    std::vector<std::vector<Edge>> maximal;
    for (const auto& s : feasible) {
        bool dominated = false;
        for (const auto& t : feasible)
            if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                dominated = true;
                break;
            }
        if (!dominated)
            maximal.push_back(s);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

Digraph random_dag(std::mt19937& rng, std::size_t n, unsigned percent) {
    std::vector<VertexId> pos(n);
    std::iota(pos.begin(), pos.end(), 0);
    for (std::size_t k = n; k > 1; --k)
        std::swap(pos[k - 1], pos[rng() % k]);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng() % 100 < percent)
                edges.push_back({pos[i], pos[j]});
    return Digraph(fresh_table(n), std::move(edges));
}

Digraph random_transitive_dag(std::mt19937& rng, std::size_t n, unsigned percent) {
    return closure(random_dag(rng, n, percent));
}

LinearOrder random_order(std::mt19937& rng, std::size_t n) {
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t k = n; k > 1; --k)
        std::swap(perm[k - 1], perm[rng() % k]);
    return LinearOrder(std::move(perm));
}

LinearOrder random_linear_extension(std::mt19937& rng, const Digraph& g) {
    std::size_t n = g.vertex_count();
    std::vector<std::size_t> indeg(n, 0);
    for (VertexId v = 0; v < n; ++v)
        indeg[v] = g.predecessors(v).size();
    std::vector<VertexId> sources;
    for (VertexId v = 0; v < n; ++v)
        if (indeg[v] == 0)
            sources.push_back(v);
    std::vector<VertexId> out;
    while (!sources.empty()) {
        std::size_t pick = rng() % sources.size();
        VertexId u = sources[pick];
        sources[pick] = sources.back();
        sources.pop_back();
        out.push_back(u);
        for (VertexId w : g.successors(u))
            if (--indeg[w] == 0)
                sources.push_back(w);
    }
    if (out.size() != n)
        throw std::logic_error("reference linear extension: graph is cyclic");
    return LinearOrder(std::move(out));
}

Digraph two_order_intersection(std::mt19937& rng, std::size_t n) {
    LinearOrder l1 = random_order(rng, n);
    LinearOrder l2 = random_order(rng, n);
    std::vector<Edge> edges;
    edges.reserve(n * n / 4);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v)
            if (u != v && l1.rank(u) < l1.rank(v) && l2.rank(u) < l2.rank(v))
                edges.push_back({u, v});
    return Digraph(fresh_table(n), std::move(edges));
}

} // namespace oracle
