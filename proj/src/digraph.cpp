#include "dim2/digraph.hpp"

#include <algorithm>
#include <cctype>
#include <queue>

namespace dim2 {

namespace {

bool contains_whitespace(std::string_view s) {
    return std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

} // namespace

VertexId VertexTable::intern(std::string_view label) {
    if (label.empty() || contains_whitespace(label))
        throw std::invalid_argument("vertex label must be non-empty and free of whitespace");
    auto it = index_.find(std::string(label));
    if (it != index_.end())
        return it->second;
    VertexId id = static_cast<VertexId>(names_.size());
    names_.emplace_back(label);
    index_.emplace(names_.back(), id);
    return id;
}

std::optional<VertexId> VertexTable::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

const std::string& VertexTable::name(VertexId v) const {
    if (v >= names_.size())
        throw UnknownVertex("vertex id " + std::to_string(v) + " out of range");
    return names_[v];
}

LinearOrder::LinearOrder(std::vector<VertexId> perm) : perm_(std::move(perm)) {
    rank_.assign(perm_.size(), perm_.size());
    for (std::size_t p = 0; p < perm_.size(); ++p) {
        VertexId v = perm_[p];
        if (v >= perm_.size() || rank_[v] != perm_.size())
            throw std::invalid_argument("sequence is not a permutation of 0..n-1");
        rank_[v] = p;
    }
}

std::size_t LinearOrder::rank(VertexId v) const {
    if (v >= rank_.size())
        throw UnknownVertex("vertex id " + std::to_string(v) + " not covered by order");
    return rank_[v];
}

LinearOrder LinearOrder::reversed() const {
    std::vector<VertexId> rev(perm_.rbegin(), perm_.rend());
    return LinearOrder(std::move(rev));
}

Digraph::Digraph(VertexTable vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)) {
    std::size_t n = vertices_.size();
    for (const Edge& e : edges) {
        if (e.tail >= n || e.head >= n)
            throw UnknownVertex("edge endpoint id out of range");
        if (e.tail == e.head)
            throw InvalidEdge("self-loop '" + vertices_.name(e.tail) + "'");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    out_.assign(n, {});
    in_.assign(n, {});
    for (const Edge& e : edges) {
        out_[e.tail].push_back(e.head);
        in_[e.head].push_back(e.tail);
    }
    for (auto& preds : in_)
        std::sort(preds.begin(), preds.end());
    m_ = edges.size();
}

std::span<const VertexId> Digraph::successors(VertexId v) const {
    if (v >= out_.size())
        throw UnknownVertex("vertex id " + std::to_string(v) + " out of range");
    return out_[v];
}

std::span<const VertexId> Digraph::predecessors(VertexId v) const {
    if (v >= in_.size())
        throw UnknownVertex("vertex id " + std::to_string(v) + " out of range");
    return in_[v];
}

bool Digraph::has_edge(VertexId tail, VertexId head) const {
    if (tail >= out_.size() || head >= out_.size())
        return false;
    const auto& succ = out_[tail];
    return std::binary_search(succ.begin(), succ.end(), head);
}

std::vector<Edge> Digraph::edges() const {
    std::vector<Edge> result;
    result.reserve(m_);
    for (VertexId u = 0; u < out_.size(); ++u)
        for (VertexId v : out_[u])
            result.push_back({u, v});
    return result;
}

Orientation::Orientation(Digraph g) : g_(std::move(g)) {
    for (VertexId u = 0; u < g_.vertex_count(); ++u)
        for (VertexId v : g_.successors(u))
            if (g_.has_edge(v, u))
                throw InvalidEdge("orientation contains both directions of {" +
                                  g_.vertices().name(u) + "," + g_.vertices().name(v) + "}");
}

Digraph transitive_closure(const Digraph& g) {
    if (!is_acyclic(g))
        throw CyclicInput("transitive closure requires an acyclic graph");
    std::size_t n = g.vertex_count();
    std::vector<Edge> closure;
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < n; ++s) {
        std::fill(seen.begin(), seen.end(), 0);
        stack.assign(g.successors(s).begin(), g.successors(s).end());
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            if (seen[u])
                continue;
            seen[u] = 1;
            closure.push_back({s, u});
            for (VertexId w : g.successors(u))
                if (!seen[w])
                    stack.push_back(w);
        }
    }
    return Digraph(g.vertices(), std::move(closure));
}

Digraph undirected_closure(const Digraph& g) {
    std::vector<Edge> edges = g.edges();
    std::size_t m = edges.size();
    edges.reserve(2 * m);
    for (std::size_t i = 0; i < m; ++i)
        edges.push_back({edges[i].head, edges[i].tail});
    return Digraph(g.vertices(), std::move(edges));
}

Digraph complement(const Digraph& g) {
    std::size_t n = g.vertex_count();
    std::vector<Edge> edges;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = 0; b < n; ++b)
            if (a != b && !g.has_edge(a, b) && !g.has_edge(b, a))
                edges.push_back({a, b});
    return Digraph(g.vertices(), std::move(edges));
}

bool is_transitive(const Digraph& g) {
    for (VertexId a = 0; a < g.vertex_count(); ++a) {
        auto succ_a = g.successors(a);
        for (VertexId b : succ_a) {
            // need succ(b) \ {a} included in succ(a)
            for (VertexId c : g.successors(b))
                if (c != a && !g.has_edge(a, c))
                    return false;
        }
    }
    return true;
}

bool is_acyclic(const Digraph& g) {
    std::size_t n = g.vertex_count();
    std::vector<std::size_t> indeg(n, 0);
    for (VertexId v = 0; v < n; ++v)
        indeg[v] = g.predecessors(v).size();
    std::vector<VertexId> queue;
    for (VertexId v = 0; v < n; ++v)
        if (indeg[v] == 0)
            queue.push_back(v);
    std::size_t emitted = 0;
    while (!queue.empty()) {
        VertexId u = queue.back();
        queue.pop_back();
        ++emitted;
        for (VertexId w : g.successors(u))
            if (--indeg[w] == 0)
                queue.push_back(w);
    }
    return emitted == n;
}

bool is_oriented(const Digraph& g) {
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v : g.successors(u))
            if (g.has_edge(v, u))
                return false;
    return true;
}

bool is_undirected(const Digraph& g) {
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v : g.successors(u))
            if (!g.has_edge(v, u))
                return false;
    return true;
}

namespace {

// Iterative Tarjan; returns per-vertex component index (discovery order).
std::vector<VertexId> tarjan_scc(const Digraph& g, std::size_t& comp_count) {
    std::size_t n = g.vertex_count();
    constexpr VertexId none = static_cast<VertexId>(-1);
    std::vector<VertexId> low(n, 0), num(n, none), comp(n, none);
    std::vector<char> on_stack(n, 0);
    std::vector<VertexId> stack;
    VertexId counter = 0;
    comp_count = 0;

    struct Frame {
        VertexId v;
        std::size_t next_child;
    };
    std::vector<Frame> call;

    for (VertexId root = 0; root < n; ++root) {
        if (num[root] != none)
            continue;
        call.push_back({root, 0});
        while (!call.empty()) {
            auto& [v, child] = call.back();
            if (child == 0) {
                num[v] = low[v] = counter++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            auto succ = g.successors(v);
            if (child < succ.size()) {
                VertexId w = succ[child++];
                if (num[w] == none)
                    call.push_back({w, 0});
                else if (on_stack[w])
                    low[v] = std::min(low[v], num[w]);
            } else {
                if (low[v] == num[v]) {
                    VertexId w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = static_cast<VertexId>(comp_count);
                    } while (w != v);
                    ++comp_count;
                }
                VertexId done_low = low[v];
                call.pop_back();
                if (!call.empty())
                    low[call.back().v] = std::min(low[call.back().v], done_low);
            }
        }
    }
    return comp;
}

} // namespace

std::pair<Digraph, std::vector<VertexId>> condense(const Digraph& g) {
    std::size_t comp_count = 0;
    std::vector<VertexId> raw = tarjan_scc(g, comp_count);

    // Renumber components by smallest member id; label each with that
    // member's label.
    std::size_t n = g.vertex_count();
    constexpr VertexId none = static_cast<VertexId>(-1);
    std::vector<VertexId> rep(comp_count, none);
    for (VertexId v = 0; v < n; ++v)
        if (rep[raw[v]] == none)
            rep[raw[v]] = v; // ids ascend, so first hit is the minimum
    std::vector<VertexId> reps_sorted(rep);
    std::sort(reps_sorted.begin(), reps_sorted.end());
    std::vector<VertexId> renumber(comp_count);
    for (std::size_t c = 0; c < comp_count; ++c) {
        auto pos = std::lower_bound(reps_sorted.begin(), reps_sorted.end(), rep[c]);
        renumber[c] = static_cast<VertexId>(pos - reps_sorted.begin());
    }

    VertexTable table;
    for (VertexId r : reps_sorted)
        table.intern(g.vertices().name(r));

    std::vector<VertexId> mapping(n);
    for (VertexId v = 0; v < n; ++v)
        mapping[v] = renumber[raw[v]];

    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v : g.successors(u))
            if (mapping[u] != mapping[v])
                edges.push_back({mapping[u], mapping[v]});
    return {Digraph(std::move(table), std::move(edges)), std::move(mapping)};
}

LinearOrder topological_order(const Digraph& g) {
    std::size_t n = g.vertex_count();
    std::vector<std::size_t> indeg(n, 0);
    for (VertexId v = 0; v < n; ++v)
        indeg[v] = g.predecessors(v).size();
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
    for (VertexId v = 0; v < n; ++v)
        if (indeg[v] == 0)
            ready.push(v);
    std::vector<VertexId> out;
    out.reserve(n);
    while (!ready.empty()) {
        VertexId u = ready.top();
        ready.pop();
        out.push_back(u);
        for (VertexId w : g.successors(u))
            if (--indeg[w] == 0)
                ready.push(w);
    }
    if (out.size() != n)
        throw CyclicInput("graph has a directed cycle");
    return LinearOrder(std::move(out));
}

Orientation orientation_from_order(const Digraph& pairs, const LinearOrder& order) {
    if (!is_undirected(pairs))
        throw std::invalid_argument("orientation_from_order expects an undirected pair set");
    if (order.size() != pairs.vertex_count())
        throw UnknownVertex("order does not cover the vertex set");
    std::vector<Edge> edges;
    for (VertexId a = 0; a < pairs.vertex_count(); ++a)
        for (VertexId b : pairs.successors(a))
            if (order.rank(a) < order.rank(b))
                edges.push_back({a, b});
    return Orientation(Digraph(pairs.vertices(), std::move(edges)));
}

} // namespace dim2
