#include "dim2/twodim.hpp"

#include "dim2/forcing.hpp"

namespace dim2 {

namespace {

TwoDimIndex index_impl(const Digraph& g, const LinearOrder& l_h) {
    LinearOrder l_g = topological_order(g);
    return TwoDimIndex{complement_merge_unchecked(g, l_h, l_g),
                       complement_merge_unchecked(g, l_h.reversed(), l_g)};
}

} // namespace

TwoDimIndex build_index(const Digraph& g, const LinearOrder& l_h) {
    if (!is_transitive(g))
        throw NotTransitive("build_index requires a transitive graph");
    return index_impl(g, l_h);
}

TwoDimIndex build_index_unchecked(const Digraph& g, const LinearOrder& l_h) {
    return index_impl(g, l_h);
}

bool reachable(const TwoDimIndex& idx, VertexId u, VertexId v) {
    return idx.order1.rank(u) < idx.order1.rank(v) &&
           idx.order2.rank(u) < idx.order2.rank(v);
}

namespace {

Digraph filter_by_index(const Digraph& g, const TwoDimIndex& idx) {
    std::vector<Edge> kept;
    for (const Edge& e : g.edges())
        if (reachable(idx, e.tail, e.head))
            kept.push_back(e);
    return Digraph(g.vertices(), std::move(kept));
}

} // namespace

Digraph induced_subgraph(const Digraph& g, const LinearOrder& l_h) {
    return filter_by_index(g, build_index(g, l_h));
}

Digraph induced_subgraph_unchecked(const Digraph& g, const LinearOrder& l_h) {
    return filter_by_index(g, build_index_unchecked(g, l_h));
}

bool is_two_dimensional(const Digraph& g) {
    if (!is_acyclic(g))
        throw CyclicInput("is_two_dimensional requires an acyclic graph");
    if (!is_transitive(g))
        throw NotTransitive("is_two_dimensional requires a transitive graph");
    return is_transitively_orientable(complement(g));
}

} // namespace dim2
