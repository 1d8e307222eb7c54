#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dim2/errors.hpp"

namespace dim2 {

using VertexId = std::uint32_t;

struct Edge {
    VertexId tail;
    VertexId head;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Bijection between external text labels and dense ids 0..n-1,
// in first-appearance order.
class VertexTable {
public:
    VertexTable() = default;

    // Returns the id of `label`, interning it if new.
    // Labels must be non-empty and free of whitespace.
    VertexId intern(std::string_view label);

    std::optional<VertexId> find(std::string_view label) const;
    const std::string& name(VertexId v) const;
    std::size_t size() const { return names_.size(); }

    friend bool operator==(const VertexTable&, const VertexTable&) = default;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> index_;
};

// A permutation of the vertex ids 0..n-1 with its inverse rank map.
class LinearOrder {
public:
    explicit LinearOrder(std::vector<VertexId> perm);

    std::size_t size() const { return perm_.size(); }
    VertexId at(std::size_t pos) const { return perm_[pos]; }
    std::size_t rank(VertexId v) const;
    std::span<const VertexId> sequence() const { return perm_; }
    LinearOrder reversed() const;

    friend bool operator==(const LinearOrder&, const LinearOrder&) = default;

private:
    std::vector<VertexId> perm_;
    std::vector<std::size_t> rank_;
};

// Simple directed graph over interned vertices; adjacency kept sorted.
// Immutable after construction.
class Digraph {
public:
    Digraph() = default;
    Digraph(VertexTable vertices, std::vector<Edge> edges);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return m_; }
    const VertexTable& vertices() const { return vertices_; }

    std::span<const VertexId> successors(VertexId v) const;
    std::span<const VertexId> predecessors(VertexId v) const;
    bool has_edge(VertexId tail, VertexId head) const;

    // All edges in sorted (tail, head) order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    VertexTable vertices_;
    std::vector<std::vector<VertexId>> out_;
    std::vector<std::vector<VertexId>> in_;
    std::size_t m_ = 0;
};

// Directed edge set with no symmetric pair: E and its inverse are disjoint.
class Orientation {
public:
    explicit Orientation(Digraph g);

    const Digraph& graph() const { return g_; }

private:
    Digraph g_;
};

Digraph transitive_closure(const Digraph& g);
Digraph undirected_closure(const Digraph& g);
Digraph complement(const Digraph& g);

bool is_transitive(const Digraph& g);
bool is_acyclic(const Digraph& g);
bool is_oriented(const Digraph& g);
bool is_undirected(const Digraph& g);

// Condensation into strongly connected components plus the vertex -> component
// map. Components are numbered by their smallest member id and labeled with
// that member's label.
std::pair<Digraph, std::vector<VertexId>> condense(const Digraph& g);

// Kahn's scheme; among available sources always picks the smallest id.
LinearOrder topological_order(const Digraph& g);

// Orients each undirected pair {a,b} of `pairs` as a->b iff
// rank(a) < rank(b) in `order`.
Orientation orientation_from_order(const Digraph& pairs, const LinearOrder& order);

} // namespace dim2
