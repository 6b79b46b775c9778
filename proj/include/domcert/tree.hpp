#ifndef DOMCERT_TREE_HPP
#define DOMCERT_TREE_HPP

#include <span>
#include <vector>

#include "domcert/errors.hpp"

namespace domcert {

/// Rooted tree given by parent links, carrying a preorder numbering 1..n and
/// subtree sizes so ancestor tests run in constant time.
struct RootedTree {
    Vertex root = 0;
    std::vector<Vertex> parent;   // kNoVertex at the root
    std::vector<Vertex> rank;     // preorder number, 1..n
    std::vector<Vertex> size;     // descendants including self
    std::vector<Vertex> by_rank;  // by_rank[k-1] = vertex numbered k

    Vertex n() const { return static_cast<Vertex>(parent.size()); }

    // v is an ancestor of w iff v <= w < v + size(v) in preorder numbers.
    bool is_ancestor(Vertex v, Vertex w) const {
        return rank[static_cast<size_t>(v)] <= rank[static_cast<size_t>(w)] &&
               rank[static_cast<size_t>(w)] <
                   rank[static_cast<size_t>(v)] + size[static_cast<size_t>(v)];
    }

    /// Nearest common ancestor by a two-finger walk on preorder numbers.
    /// O(depth); fine off the hot path.
    Vertex nca(Vertex v, Vertex w) const;
};

using DomTree = RootedTree;

/// Builds the tree from parent links; children are ordered by increasing id.
/// Throws MismatchedInputs if the links do not form a tree on all vertices.
RootedTree tree_from_parents(Vertex root, std::span<const Vertex> parent);

/// Attaches a caller-supplied preorder numbering (e.g. a low-high order) to a
/// parent map and computes sizes. The numbering is trusted to be a preorder.
RootedTree tree_with_order(Vertex root, std::span<const Vertex> parent,
                           std::span<const Vertex> rank);

}  // namespace domcert

#endif
