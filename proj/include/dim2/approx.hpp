#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dim2/digraph.hpp"
#include "dim2/twodim.hpp"

namespace dim2 {

struct SearchResult {
    LinearOrder best_order;
    Digraph best_subgraph;
    std::size_t kept_edges = 0;
    std::size_t removed_edges = 0;
    std::size_t iterations = 0;
};

// Baseline subgraph: each vertex keeps one incoming edge, chosen among its
// transitive-reduction predecessors as the one with the most descendants
// (ties by smallest id); returned closure-augmented.
Digraph tree_cover(const Digraph& g);

// 2-dimensional supergraph of s inside g, via an orientation of
// complement(s) restricted to complement(g)'s pairs.
Digraph improve(const Digraph& g, const Digraph& s);

// Hill-climbing over orientation orders: adjacent transpositions, random
// reinsertions, random restarts. Deterministic for a fixed seed.
SearchResult local_search(const Digraph& g, std::size_t budget, std::uint64_t seed);

// All n! orders; ties resolved toward the lexicographically least permutation.
SearchResult exhaustive_best(const Digraph& g);

// Every transitive 2-dimensional subgraph of g that is maximal under edge-set
// inclusion, as sorted edge lists, sorted lexicographically.
std::vector<std::vector<Edge>> enumerate_locally_maximal_2d(const Digraph& g);

} // namespace dim2
