#ifndef DOMCERT_SEMIDOM_HPP
#define DOMCERT_SEMIDOM_HPP

#include <utility>
#include <vector>

#include "domcert/dfs.hpp"
#include "domcert/graph.hpp"
#include "domcert/tree.hpp"

namespace domcert {

/// Semi-dominators and relative dominators of a flow graph with respect to a
/// depth-first spanning tree, plus the tail g(v) of an arc that is last on
/// some high path from sd(v) to v. All values are vertex ids; use dfs.pre to
/// read them as preorder numbers.
struct SemiDomInfo {
    std::vector<Vertex> sd;      // sd[s] = s
    std::vector<Vertex> rd;      // minimum-sd vertex on F(sd(v), v], smallest on ties
    std::vector<Vertex> g;       // g[s] = kNoVertex
    std::vector<ArcId> g_arc;  // the arc (g(v), v)
    DfsInfo dfs;
};

/// Simple Lengauer-Tarjan variant: eval/link forest with path compression
/// only, vertices processed in decreasing preorder. O(m log n).
SemiDomInfo compute_semidominators(const FlowGraph& g, const DfsInfo& d);

/// d(v) = sd(v) if sd(v) = sd(rd(v)), else d(rd(v)); applied in increasing
/// preorder. The returned tree carries a preorder numbering and sizes.
DomTree dominators_from_semis(const SemiDomInfo& info);

/// One-call pipeline: dfs + semi-dominators + dominator tree.
std::pair<DomTree, SemiDomInfo> compute_dominator_tree(const FlowGraph& g);

}  // namespace domcert

#endif
