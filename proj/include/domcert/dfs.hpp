#ifndef DOMCERT_DFS_HPP
#define DOMCERT_DFS_HPP

#include <cstdint>
#include <vector>

#include "domcert/graph.hpp"

namespace domcert {

/// Depth-first spanning tree of a flow graph. Children are explored in
/// out-arc insertion order, so the traversal is deterministic. Vertices carry
/// both preorder and reverse-postorder numbers, 1..n with the start first.
struct DfsInfo {
    Vertex root = 0;
    std::vector<Vertex> parent;      // f(v); kNoVertex at the root
    std::vector<ArcId> parent_arc;   // arc (f(v), v) used by the traversal
    std::vector<Vertex> pre;         // preorder, 1..n
    std::vector<Vertex> rpost;       // reverse postorder, 1..n
    std::vector<Vertex> size;        // subtree size in F
    std::vector<Vertex> by_pre;      // by_pre[k-1] = vertex with pre k
    std::vector<Vertex> by_rpost;    // by_rpost[k-1] = vertex with rpost k
    std::uint64_t graph_stamp = 0;

    // Both numberings order every ancestor before its descendants, so the
    // same interval test works for either; subtree sizes agree.
    bool is_ancestor_pre(Vertex v, Vertex w) const {
        return pre[static_cast<size_t>(v)] <= pre[static_cast<size_t>(w)] &&
               pre[static_cast<size_t>(w)] < pre[static_cast<size_t>(v)] + size[static_cast<size_t>(v)];
    }
    bool is_ancestor_rpost(Vertex v, Vertex w) const {
        return rpost[static_cast<size_t>(v)] <= rpost[static_cast<size_t>(w)] &&
               rpost[static_cast<size_t>(w)] <
                   rpost[static_cast<size_t>(v)] + size[static_cast<size_t>(v)];
    }
};

DfsInfo dfs(const FlowGraph& g);

}  // namespace domcert

#endif
