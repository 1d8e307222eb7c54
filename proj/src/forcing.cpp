#include "dim2/forcing.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace dim2 {

namespace {

std::uint64_t pair_key(VertexId a, VertexId b) {
    if (a > b)
        std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

bool adjacent_either(const Digraph& g, VertexId u, VertexId v) {
    return g.has_edge(u, v) || g.has_edge(v, u);
}

} // namespace

bool forces(const Digraph& g, Edge e1, Edge e2) {
    if (!g.has_edge(e1.tail, e1.head))
        throw EdgeNotPresent("first edge is not in the graph");
    if (!g.has_edge(e2.tail, e2.head))
        throw EdgeNotPresent("second edge is not in the graph");
    return (e1.tail == e2.tail && !adjacent_either(g, e1.head, e2.head)) ||
           (e1.head == e2.head && !adjacent_either(g, e1.tail, e2.tail));
}

std::size_t ImplicationClasses::class_of(VertexId a, VertexId b) const {
    auto it = by_pair_.find(pair_key(a, b));
    if (it == by_pair_.end())
        throw EdgeNotPresent("pair is not an edge of the graph");
    return it->second;
}

ImplicationClasses implication_classes(const Digraph& g) {
    if (!is_undirected(g))
        throw std::invalid_argument("implication_classes expects an undirected graph");

    // Undirected projection of the forcing relation: pairs {x,y} and {x,z}
    // are related iff y and z are non-adjacent. Connected components of that
    // relation are exactly the directed classes folded over inversion.
    ImplicationClasses result;
    for (VertexId a = 0; a < g.vertex_count(); ++a) {
        for (VertexId b : g.successors(a)) {
            if (b < a || result.by_pair_.count(pair_key(a, b)))
                continue;
            std::size_t cls = result.classes_.size();
            std::vector<Edge> members;
            std::vector<Edge> queue{{a, b}};
            result.by_pair_.emplace(pair_key(a, b), cls);
            while (!queue.empty()) {
                auto [x, y] = queue.back();
                queue.pop_back();
                members.push_back({std::min(x, y), std::max(x, y)});
                auto visit = [&](VertexId shared, VertexId mine, VertexId other) {
                    // {shared,mine} ~ {shared,other} when mine,other non-adjacent
                    if (other == mine || adjacent_either(g, mine, other))
                        return;
                    if (result.by_pair_.emplace(pair_key(shared, other), cls).second)
                        queue.push_back({shared, other});
                };
                for (VertexId z : g.successors(x))
                    visit(x, y, z);
                for (VertexId z : g.successors(y))
                    visit(y, x, z);
            }
            std::sort(members.begin(), members.end());
            result.classes_.push_back(std::move(members));
        }
    }
    return result;
}

namespace {

// Pair states for the orientation sweep. "Pending" pairs belong to the class
// currently being propagated and still count as adjacent; "done" pairs were
// oriented by an earlier class and count as removed from the working graph.
enum : std::uint8_t {
    kAbsent = 0,
    kAlive = 1,
    kPendingOut = 2,
    kPendingIn = 3,
    kDoneOut = 4,
    kDoneIn = 5,
};

} // namespace

std::optional<Orientation> transitive_orientation(const Digraph& g) {
    if (!is_undirected(g))
        throw std::invalid_argument("transitive_orientation expects an undirected graph");
    std::size_t n = g.vertex_count();
    std::vector<std::uint8_t> st(n * n, kAbsent);
    auto at = [&st, n](VertexId u, VertexId v) -> std::uint8_t& {
        return st[static_cast<std::size_t>(u) * n + v];
    };
    auto adjacent = [&at](VertexId u, VertexId v) {
        std::uint8_t s = at(u, v);
        return s == kAlive || s == kPendingOut || s == kPendingIn;
    };
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v : g.successors(u))
            at(u, v) = kAlive;

    std::vector<Edge> oriented;
    oriented.reserve(g.edge_count() / 2);

    // Classes in order of their smallest pair, seeded low-id -> high-id.
    // Each class is forced within the graph reduced by all earlier classes.
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId b : g.successors(a)) {
            if (b < a || at(a, b) != kAlive)
                continue;
            std::vector<Edge> queue{{a, b}};
            std::vector<Edge> cls;
            at(a, b) = kPendingOut;
            at(b, a) = kPendingIn;
            while (!queue.empty()) {
                auto [x, y] = queue.back();
                queue.pop_back();
                cls.push_back({x, y});
                auto force = [&](VertexId u, VertexId v) {
                    std::uint8_t& s = at(u, v);
                    if (s == kPendingOut)
                        return true;
                    if (s == kPendingIn)
                        return false; // both directions forced
                    s = kPendingOut;
                    at(v, u) = kPendingIn;
                    queue.push_back({u, v});
                    return true;
                };
                for (VertexId z : g.successors(x)) {
                    // x->y forces x->z when z is adjacent to x but not to y
                    if (z == y || !adjacent(x, z) || adjacent(y, z))
                        continue;
                    if (!force(x, z))
                        return std::nullopt;
                }
                for (VertexId w : g.successors(y)) {
                    // x->y forces w->y when w is adjacent to y but not to x
                    if (w == x || !adjacent(y, w) || adjacent(x, w))
                        continue;
                    if (!force(w, y))
                        return std::nullopt;
                }
            }
            for (auto [u, v] : cls) {
                at(u, v) = kDoneOut;
                at(v, u) = kDoneIn;
                oriented.push_back({u, v});
            }
        }
    }

    // Verify the assembled orientation is genuinely transitive: closed under
    // forcing and free of cycles.
    Digraph o(g.vertices(), std::move(oriented));
    if (!is_oriented(o) || !is_acyclic(o) || !is_transitive(o))
        return std::nullopt;
    return Orientation(std::move(o));
}

bool is_transitively_orientable(const Digraph& g) {
    return transitive_orientation(g).has_value();
}

bool is_permutation_graph(const Digraph& g) {
    return is_transitively_orientable(g) && is_transitively_orientable(complement(g));
}

std::optional<LinearOrder> complement_orientation_order(const Digraph& g) {
    auto to = transitive_orientation(complement(g));
    if (!to)
        return std::nullopt;
    return topological_order(to->graph());
}

} // namespace dim2
