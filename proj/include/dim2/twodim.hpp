#pragma once

#include "dim2/digraph.hpp"
#include "dim2/merge.hpp"

namespace dim2 {

// Two linear orders whose intersection is the comparability relation of the
// induced 2-dimensional subgraph.
struct TwoDimIndex {
    LinearOrder order1;
    LinearOrder order2;
};

TwoDimIndex build_index(const Digraph& g, const LinearOrder& l_h);
TwoDimIndex build_index_unchecked(const Digraph& g, const LinearOrder& l_h);

// True iff u precedes v in both orders. O(1).
bool reachable(const TwoDimIndex& idx, VertexId u, VertexId v);

// G_H: the edges of g kept by the index, i.e. g minus the undirected closure
// of tc(H). Always transitive and 2-dimensional for transitive acyclic g.
Digraph induced_subgraph(const Digraph& g, const LinearOrder& l_h);
Digraph induced_subgraph_unchecked(const Digraph& g, const LinearOrder& l_h);

// True iff complement(g) is transitively orientable; g must be a transitive DAG.
bool is_two_dimensional(const Digraph& g);

} // namespace dim2
