#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dim2/digraph.hpp"

namespace dim2 {

// True iff e1 forces e2: same tail with non-adjacent heads, or same head
// with non-adjacent tails. Every edge forces itself.
bool forces(const Digraph& g, Edge e1, Edge e2);

// Partition of the undirected edge set of g into forcing classes.
class ImplicationClasses {
public:
    // Classes as sorted undirected pair lists ({min,max} per pair);
    // classes ordered by their smallest pair.
    const std::vector<std::vector<Edge>>& classes() const { return classes_; }

    std::size_t class_of(VertexId a, VertexId b) const;
    std::size_t count() const { return classes_.size(); }

private:
    friend ImplicationClasses implication_classes(const Digraph& g);

    std::vector<std::vector<Edge>> classes_;
    std::unordered_map<std::uint64_t, std::size_t> by_pair_;
};

ImplicationClasses implication_classes(const Digraph& g);

// Deterministic forcing-based transitive orientation of an undirected graph;
// empty optional when none exists.
std::optional<Orientation> transitive_orientation(const Digraph& g);

bool is_transitively_orientable(const Digraph& g);
bool is_permutation_graph(const Digraph& g);

// Linear order whose induced orientation of complement(g)'s pairs is the
// deterministic transitive orientation of complement(g); empty optional
// when that complement is not transitively orientable.
std::optional<LinearOrder> complement_orientation_order(const Digraph& g);

} // namespace dim2
