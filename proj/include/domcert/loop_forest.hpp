#ifndef DOMCERT_LOOP_FOREST_HPP
#define DOMCERT_LOOP_FOREST_HPP

#include <utility>
#include <vector>

#include "domcert/dfs.hpp"
#include "domcert/graph.hpp"

namespace domcert {

/// Loop nesting forest of Tarjan/Havlak for the given depth-first tree:
/// header(v) is the maximum proper ancestor u of v in F such that v reaches u
/// through descendants of u. For each vertex absorbed into a loop, out_target
/// and out_origin record the contracted outgoing arc used by the backward
/// traversal; following out_target links from any interval member reaches the
/// header without repeating a vertex.
struct LoopForest {
    std::vector<Vertex> header;      // h(v); kNoVertex when v is a root of H
    std::vector<Vertex> out_target;  // interval member the out arc enters
    std::vector<ArcId> out_origin;   // original arc behind that contracted arc
    DfsInfo dfs;
};

/// Near-linear construction: headers in decreasing reverse postorder, loop
/// bodies collapsed with disjoint set union.
LoopForest compute_loop_forest(const FlowGraph& g, const DfsInfo& d);

/// Per header in decreasing reverse postorder, its children in H (the
/// members of its contraction interval).
std::vector<std::pair<Vertex, std::vector<Vertex>>> intervals(const LoopForest& lf);

}  // namespace domcert

#endif
