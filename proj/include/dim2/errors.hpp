#pragma once

#include <stdexcept>
#include <string>

namespace dim2 {

// Base for all recoverable errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (bad tokens, duplicate labels in an order, ...).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Edge rejected at construction (self-loop).
class InvalidEdge : public Error {
public:
    explicit InvalidEdge(const std::string& what) : Error(what) {}
};

// A label or id that is not part of the vertex set in play.
class UnknownVertex : public Error {
public:
    explicit UnknownVertex(const std::string& what) : Error(what) {}
};

// A linear order that does not cover the whole vertex set.
class IncompleteOrder : public Error {
public:
    explicit IncompleteOrder(const std::string& what) : Error(what) {}
};

// forces() asked about a pair that is not an edge of the graph.
class EdgeNotPresent : public Error {
public:
    explicit EdgeNotPresent(const std::string& what) : Error(what) {}
};

// Instance exceeds a hard enumeration guard.
class TooLarge : public Error {
public:
    explicit TooLarge(const std::string& what) : Error(what) {}
};

// Operation requires an acyclic input.
class CyclicInput : public Error {
public:
    explicit CyclicInput(const std::string& what) : Error(what) {}
};

// Operation requires a transitive input.
class NotTransitive : public Error {
public:
    explicit NotTransitive(const std::string& what) : Error(what) {}
};

// Complement admits no transitive orientation.
class NotOrientable : public Error {
public:
    explicit NotOrientable(const std::string& what) : Error(what) {}
};

// Second argument is not a subgraph of the first.
class NotSubgraph : public Error {
public:
    explicit NotSubgraph(const std::string& what) : Error(what) {}
};

// Internal invariant violation inside the countdown merge; never expected
// for inputs that satisfy the documented preconditions.
class Stall : public std::logic_error {
public:
    explicit Stall(const std::string& what) : std::logic_error(what) {}
};

} // namespace dim2
