#include "dim2/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace dim2 {

namespace {

// Yields the whitespace-separated tokens of every non-comment line.
std::vector<std::vector<std::string>> tokenize_lines(std::istream& in) {
    std::vector<std::vector<std::string>> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.front() == '#')
            continue;
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok)
            tokens.push_back(tok);
        if (!tokens.empty())
            lines.push_back(std::move(tokens));
    }
    return lines;
}

Digraph read_edge_list_impl(std::istream& in, const VertexTable* fixed) {
    VertexTable table;
    if (fixed)
        table = *fixed;
    std::vector<Edge> edges;
    for (const auto& tokens : tokenize_lines(in)) {
        if (tokens.size() != 2)
            throw ParseError("edge line must have exactly two labels, got " +
                             std::to_string(tokens.size()));
        VertexId tail, head;
        if (fixed) {
            auto t = table.find(tokens[0]);
            auto h = table.find(tokens[1]);
            if (!t)
                throw UnknownVertex("unknown vertex '" + tokens[0] + "'");
            if (!h)
                throw UnknownVertex("unknown vertex '" + tokens[1] + "'");
            tail = *t;
            head = *h;
        } else {
            tail = table.intern(tokens[0]);
            head = table.intern(tokens[1]);
        }
        edges.push_back({tail, head});
    }
    return Digraph(std::move(table), std::move(edges));
}

} // namespace

Digraph read_edge_list(std::istream& in) {
    return read_edge_list_impl(in, nullptr);
}

Digraph read_edge_list(std::istream& in, const VertexTable& table) {
    return read_edge_list_impl(in, &table);
}

void write_edge_list(std::ostream& out, const Digraph& g) {
    for (const Edge& e : g.edges())
        out << g.vertices().name(e.tail) << ' ' << g.vertices().name(e.head) << '\n';
}

LinearOrder read_order(std::istream& in, const VertexTable& table) {
    std::vector<VertexId> perm;
    std::vector<char> seen(table.size(), 0);
    std::string tok;
    while (in >> tok) {
        auto v = table.find(tok);
        if (!v)
            throw UnknownVertex("unknown vertex '" + tok + "' in order");
        if (seen[*v])
            throw ParseError("duplicate vertex '" + tok + "' in order");
        seen[*v] = 1;
        perm.push_back(*v);
    }
    if (perm.size() != table.size())
        throw IncompleteOrder("order covers " + std::to_string(perm.size()) +
                              " of " + std::to_string(table.size()) + " vertices");
    return LinearOrder(std::move(perm));
}

void write_order(std::ostream& out, const LinearOrder& order, const VertexTable& table) {
    for (std::size_t p = 0; p < order.size(); ++p) {
        if (p)
            out << ' ';
        out << table.name(order.at(p));
    }
    out << '\n';
}

void write_index(std::ostream& out, const TwoDimIndex& idx, const VertexTable& table) {
    out << "dim2-index v1 n=" << table.size() << '\n';
    write_order(out, idx.order1, table);
    write_order(out, idx.order2, table);
}

std::pair<TwoDimIndex, VertexTable> read_index(std::istream& in) {
    std::string header;
    if (!std::getline(in, header))
        throw ParseError("empty index file");
    std::istringstream hs(header);
    std::string magic, version, nfield;
    hs >> magic >> version >> nfield;
    if (magic != "dim2-index" || version != "v1" || nfield.rfind("n=", 0) != 0)
        throw ParseError("bad index header '" + header + "'");
    std::size_t n = 0;
    try {
        n = std::stoul(nfield.substr(2));
    } catch (const std::exception&) {
        throw ParseError("bad vertex count in index header");
    }

    std::string line1, line2;
    if (!std::getline(in, line1) || !std::getline(in, line2))
        throw ParseError("index file must contain two order lines");

    // Intern the first permutation's labels in file order, so order1 is the
    // identity; the second line is read against the same table.
    VertexTable table;
    std::vector<VertexId> perm1;
    {
        std::istringstream ls(line1);
        std::string tok;
        while (ls >> tok) {
            VertexId before = static_cast<VertexId>(table.size());
            VertexId v = table.intern(tok);
            if (v != before)
                throw ParseError("duplicate vertex '" + tok + "' in index");
            perm1.push_back(v);
        }
    }
    if (perm1.size() != n)
        throw ParseError("index header says n=" + std::to_string(n) + " but first order has " +
                         std::to_string(perm1.size()) + " vertices");
    std::istringstream ls2(line2);
    LinearOrder order2 = read_order(ls2, table);
    return {TwoDimIndex{LinearOrder(std::move(perm1)), std::move(order2)}, std::move(table)};
}

} // namespace dim2
