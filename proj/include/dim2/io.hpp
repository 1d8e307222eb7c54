#pragma once

#include <iosfwd>
#include <utility>

#include "dim2/digraph.hpp"
#include "dim2/twodim.hpp"

namespace dim2 {

// Edge list: one "tail head" pair per line; '#' starts a comment line;
// blank lines ignored. Labels are interned in first-appearance order.
Digraph read_edge_list(std::istream& in);

// Same format, but labels must already exist in `table` (graph gets the
// full table's vertex set).
Digraph read_edge_list(std::istream& in, const VertexTable& table);

void write_edge_list(std::ostream& out, const Digraph& g);

// Whitespace-separated labels forming one complete permutation of `table`.
LinearOrder read_order(std::istream& in, const VertexTable& table);

void write_order(std::ostream& out, const LinearOrder& order, const VertexTable& table);

// Index file: header "dim2-index v1 n=<n>" then the two label permutations.
void write_index(std::ostream& out, const TwoDimIndex& idx, const VertexTable& table);
std::pair<TwoDimIndex, VertexTable> read_index(std::istream& in);

} // namespace dim2
