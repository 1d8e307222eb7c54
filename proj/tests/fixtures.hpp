#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "dim2/digraph.hpp"
#include "dim2/io.hpp"

namespace fx {

// Parse an edge list with labels interned in first-appearance order.
inline dim2::Digraph graph_from(const std::string& text) {
    std::istringstream in(text);
    return dim2::read_edge_list(in);
}

// Parse an edge list against a fixed label order, so ids match label order
// even when edges mention labels in another sequence.
inline dim2::Digraph labeled(const std::string& labels, const std::string& edges) {
    dim2::VertexTable t;
    std::istringstream ls(labels);
    std::string lab;
    while (ls >> lab)
        t.intern(lab);
    std::istringstream in(edges);
    return dim2::read_edge_list(in, t);
}

inline dim2::VertexTable table_n(std::size_t n) {
    dim2::VertexTable t;
    for (std::size_t i = 0; i < n; ++i)
        t.intern("v" + std::to_string(i));
    return t;
}

inline dim2::Digraph make(std::size_t n, std::vector<dim2::Edge> edges) {
    return dim2::Digraph(table_n(n), std::move(edges));
}

inline dim2::LinearOrder order_of(const dim2::Digraph& g, const std::string& labels) {
    std::istringstream in(labels);
    return dim2::read_order(in, g.vertices());
}

// Six-vertex DAG whose closure is 2-dimensional; A..F get ids 0..5.
inline dim2::Digraph p1() {
    return labeled("A B C D E F", "A B\nA C\nA D\nB E\nC E\nD F\n");
}

inline dim2::Digraph tc_p1() {
    return labeled("A B C D E F", "A B\nA C\nA D\nA E\nA F\nB E\nC E\nD F\n");
}

// Transitive six-vertex graph that is not 2-dimensional.
inline dim2::Digraph p2() {
    return labeled("A B C D E F", "A B\nA D\nA E\nA F\nB E\nC E\nC F\nD F\n");
}

// Seven-vertex DAG used by the tree-cover / improvement examples.
inline dim2::Digraph p3() {
    return labeled("A B C D E F G", "A B\nA C\nA D\nB E\nB F\nC E\nC G\nD F\nD G\n");
}

inline dim2::Digraph tc_p3() {
    return labeled("A B C D E F G",
                   "A B\nA C\nA D\nA E\nA F\nA G\nB E\nB F\nC E\nC G\nD F\nD G\n");
}

// Closure-augmented tree inside tc(P3): forest {A->B,A->C,A->D,B->E,B->F,D->G}.
inline dim2::Digraph tree_t() {
    return labeled("A B C D E F G",
                   "A B\nA C\nA D\nA E\nA F\nA G\nB E\nB F\nD G\n");
}

// Five-vertex restriction of P2 to {A,B,C,D,F}.
inline dim2::Digraph g5() {
    return labeled("A B C D F", "A B\nA D\nA F\nC F\nD F\n");
}

// The standard dimension-3 poset: three minimal a_i, three maximal b_j,
// a_i -> b_j iff i != j.
inline dim2::Digraph s3() {
    return labeled("a1 a2 a3 b1 b2 b3",
                   "a1 b2\na1 b3\na2 b1\na2 b3\na3 b1\na3 b2\n");
}

inline dim2::Digraph chain(std::size_t n) {
    std::vector<dim2::Edge> edges;
    for (dim2::VertexId i = 0; i + 1 < n; ++i)
        edges.push_back({i, static_cast<dim2::VertexId>(i + 1)});
    return make(n, std::move(edges));
}

inline dim2::Digraph star(std::size_t n) {
    std::vector<dim2::Edge> edges;
    for (dim2::VertexId i = 1; i < n; ++i)
        edges.push_back({0, i});
    return make(n, std::move(edges));
}

inline dim2::Digraph complete_tournament(std::size_t n) {
    std::vector<dim2::Edge> edges;
    for (dim2::VertexId i = 0; i < n; ++i)
        for (dim2::VertexId j = i + 1; j < n; ++j)
            edges.push_back({i, j});
    return make(n, std::move(edges));
}

inline dim2::Digraph complete_undirected(std::size_t n) {
    std::vector<dim2::Edge> edges;
    for (dim2::VertexId i = 0; i < n; ++i)
        for (dim2::VertexId j = 0; j < n; ++j)
            if (i != j)
                edges.push_back({i, j});
    return make(n, std::move(edges));
}

inline dim2::Digraph cycle5_undirected() {
    std::vector<dim2::Edge> edges;
    for (dim2::VertexId i = 0; i < 5; ++i) {
        dim2::VertexId j = (i + 1) % 5;
        edges.push_back({i, j});
        edges.push_back({j, i});
    }
    return make(5, std::move(edges));
}

inline dim2::Digraph edgeless(std::size_t n) { return make(n, {}); }

inline std::vector<dim2::Edge> sorted_edges(const dim2::Digraph& g) { return g.edges(); }

inline std::string order_string(const dim2::Digraph& g, const dim2::LinearOrder& l) {
    std::string s;
    for (std::size_t p = 0; p < l.size(); ++p) {
        if (p)
            s += ' ';
        s += g.vertices().name(l.at(p));
    }
    return s;
}

} // namespace fx
