#include "dim2/merge.hpp"

#include <functional>
#include <limits>
#include <queue>

namespace dim2 {

namespace {

constexpr VertexId kNone = std::numeric_limits<VertexId>::max();

} // namespace

LinearOrder merge(const Digraph& g, const LinearOrder& l_comp) {
    std::size_t n = g.vertex_count();
    if (l_comp.size() != n)
        throw IncompleteOrder("order covers " + std::to_string(l_comp.size()) +
                              " of " + std::to_string(n) + " vertices");
    std::vector<std::size_t> indeg(n, 0);
    for (VertexId v = 0; v < n; ++v)
        indeg[v] = g.predecessors(v).size();
    // Sources keyed by their rank in l_comp; the heap pops the earliest.
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (VertexId v = 0; v < n; ++v)
        if (indeg[v] == 0)
            ready.push(l_comp.rank(v));
    std::vector<VertexId> out;
    out.reserve(n);
    while (!ready.empty()) {
        VertexId u = l_comp.at(ready.top());
        ready.pop();
        out.push_back(u);
        for (VertexId w : g.successors(u))
            if (--indeg[w] == 0)
                ready.push(l_comp.rank(w));
    }
    if (out.size() != n)
        throw CyclicInput("graph has a directed cycle");
    return LinearOrder(std::move(out));
}

std::vector<std::uint32_t> initial_countdown(const Digraph& g, const LinearOrder& l_h) {
    std::size_t n = g.vertex_count();
    if (l_h.size() != n)
        throw IncompleteOrder("order covers " + std::to_string(l_h.size()) +
                              " of " + std::to_string(n) + " vertices");
    std::vector<std::uint32_t> countdown(n, 0);
    for (VertexId v = 0; v < n; ++v) {
        std::size_t earlier_neighbors = 0;
        for (VertexId w : g.successors(v))
            if (l_h.rank(w) < l_h.rank(v))
                ++earlier_neighbors;
        for (VertexId w : g.predecessors(v))
            if (l_h.rank(w) < l_h.rank(v))
                ++earlier_neighbors;
        countdown[v] = static_cast<std::uint32_t>(l_h.rank(v) - earlier_neighbors);
    }
    return countdown;
}

LinearOrder complement_merge(const Digraph& g, const LinearOrder& l_h) {
    if (!is_transitive(g))
        throw NotTransitive("complement_merge requires a transitive graph");
    return complement_merge_unchecked(g, l_h);
}

LinearOrder complement_merge_unchecked(const Digraph& g, const LinearOrder& l_h) {
    return complement_merge_unchecked(g, l_h, topological_order(g));
}

LinearOrder complement_merge_unchecked(const Digraph& g, const LinearOrder& l_h,
                                       const LinearOrder& tie_break) {
    std::size_t n = g.vertex_count();
    if (tie_break.size() != n)
        throw IncompleteOrder("tie-break order covers " + std::to_string(tie_break.size()) +
                              " of " + std::to_string(n) + " vertices");
    std::vector<std::uint32_t> countdown = initial_countdown(g, l_h);

    // Buckets of vertices sharing a countdown value, as intrusive doubly
    // linked lists; countdown never reaches 2n (it is bounded by n-1 pending
    // complement ancestors plus at most n processed vertices).
    std::vector<VertexId> head(2 * n + 1, kNone), nxt(n, kNone), prv(n, kNone);
    auto bucket_insert = [&](VertexId v, std::uint32_t k) {
        nxt[v] = head[k];
        prv[v] = kNone;
        if (head[k] != kNone)
            prv[head[k]] = v;
        head[k] = v;
    };
    auto bucket_remove = [&](VertexId v, std::uint32_t k) {
        if (prv[v] != kNone)
            nxt[prv[v]] = nxt[v];
        else
            head[k] = nxt[v];
        if (nxt[v] != kNone)
            prv[nxt[v]] = prv[v];
    };
    for (VertexId v = 0; v < n; ++v)
        bucket_insert(v, countdown[v]);

    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> pool;
    std::vector<char> emitted(n, 0);
    std::vector<VertexId> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        // Everyone whose countdown has reached i becomes eligible. Pool
        // members keep countdown <= i from here on, so the increment guard
        // below never touches their stale list links.
        for (VertexId v = head[i]; v != kNone; v = nxt[v])
            pool.push(tie_break.rank(v));
        head[i] = kNone;
        if (pool.empty())
            throw Stall("countdown pool drained with " + std::to_string(n - i) +
                        " vertices left");
        VertexId s = tie_break.at(pool.top());
        pool.pop();
        emitted[s] = 1;
        out.push_back(s);
        auto bump = [&](VertexId w) {
            if (emitted[w] || countdown[w] <= i)
                return;
            bucket_remove(w, countdown[w]);
            if (++countdown[w] >= head.size())
                throw Stall("countdown overflow at vertex " + g.vertices().name(w));
            bucket_insert(w, countdown[w]);
        };
        for (VertexId w : g.successors(s))
            bump(w);
        for (VertexId w : g.predecessors(s))
            bump(w);
    }
    return LinearOrder(std::move(out));
}

} // namespace dim2
