#ifndef DOMCERT_DISJOINT_PATHS_HPP
#define DOMCERT_DISJOINT_PATHS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "domcert/graph.hpp"

namespace domcert {

/// Answers "are there vertex-disjoint paths from s1 and s2 covering {u, v}?"
/// in constant time after linear preprocessing: a new root s with arcs to s1
/// and s2 is added, and the index keeps the dominator tree, a low-high
/// order, two strongly independent spanning trees, and per vertex the child
/// of s that dominates it.
class DisjointPathIndex {
public:
    /// base graph + two start vertices; every vertex must be reachable from
    /// s1 or s2 (UnreachableVertex otherwise).
    static DisjointPathIndex build(Vertex n, std::span<const Arc> arcs, Vertex s1, Vertex s2);

    /// u = v: paths exist iff c(u) = u; otherwise iff c(u) != c(v). O(1).
    bool query_exists(Vertex u, Vertex v) const;

    /// The two paths, first from s1 and second from s2, or nullopt when they
    /// do not exist. Cost linear in the output length.
    std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> query_paths(
        Vertex u, Vertex v) const;

    /// c(v): the child of the artificial root dominating v.
    Vertex entry(Vertex v) const;

    Vertex base_vertex_count() const { return n_base_; }

private:
    Vertex n_base_ = 0, root_ = 0, s1_ = 0, s2_ = 0;
    std::vector<Vertex> c_;           // entry child per vertex
    std::vector<Vertex> b_, r_;       // strongly independent trees, parent maps
    std::vector<Vertex> lh_rank_;     // low-high numbering of the dominator tree

    void check(Vertex v) const {
        if (v < 0 || v >= n_base_) throw UnknownVertex(v);
    }
    std::vector<Vertex> walk(const std::vector<Vertex>& parent, Vertex v) const;
};

}  // namespace domcert

#endif
