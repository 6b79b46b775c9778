#ifndef DOMCERT_ERRORS_HPP
#define DOMCERT_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace domcert {

using Vertex = std::int32_t;
using ArcId = std::int32_t;

inline constexpr Vertex kNoVertex = -1;
inline constexpr ArcId kNoArc = -1;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidVertex : Error {
    Vertex vertex;
    explicit InvalidVertex(Vertex v)
        : Error("vertex id out of range: " + std::to_string(v)), vertex(v) {}
};

struct UnreachableVertex : Error {
    Vertex vertex;
    explicit UnreachableVertex(Vertex v)
        : Error("vertex not reachable from start: " + std::to_string(v)), vertex(v) {}
};

struct ParentPropertyError : Error {
    ArcId arc;
    explicit ParentPropertyError(ArcId a)
        : Error("tree violates the parent property at arc " + std::to_string(a)), arc(a) {}
};

struct MalformedScript : Error {
    using Error::Error;
};

struct NotReducible : Error {
    NotReducible() : Error("flow graph is not reducible") {}
};

// Raised by the low-high constructors when the witness arcs guaranteed for the
// true dominator tree are missing; certifies the input tree is an impostor.
struct MissingWitnessArcs : Error {
    Vertex vertex;
    explicit MissingWitnessArcs(Vertex v)
        : Error("no tree arc and no two distinct derived arcs enter vertex " + std::to_string(v)),
          vertex(v) {}
};

struct MissingTestArc : Error {
    Vertex vertex;
    explicit MissingTestArc(Vertex v)
        : Error("no usable test arc while ordering vertex " + std::to_string(v) +
                "; the given tree is not the dominator tree"),
          vertex(v) {}
};

struct NoPeelableVertex : Error {
    NoPeelableVertex()
        : Error("no vertex with spare in-degree; the given trees are not independent") {}
};

struct InvalidLowHigh : Error {
    Vertex vertex;
    explicit InvalidLowHigh(Vertex v)
        : Error("order is not low-high at vertex " + std::to_string(v)), vertex(v) {}
};

struct UnknownVertex : Error {
    Vertex vertex;
    explicit UnknownVertex(Vertex v)
        : Error("vertex not present in index: " + std::to_string(v)), vertex(v) {}
};

struct InfeasibleSpec : Error {
    using Error::Error;
};

struct MismatchedInputs : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what_)
        : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

}  // namespace domcert

#endif
