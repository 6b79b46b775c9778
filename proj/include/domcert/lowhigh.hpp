#ifndef DOMCERT_LOWHIGH_HPP
#define DOMCERT_LOWHIGH_HPP

#include <vector>

#include "domcert/derived.hpp"
#include "domcert/graph.hpp"
#include "domcert/loop_forest.hpp"
#include "domcert/lowhigh_order.hpp"
#include "domcert/tree.hpp"
#include "domcert/trees.hpp"

namespace domcert {

/// True iff the graph becomes acyclic when every arc (v, w) with w dominating
/// v is deleted.
bool is_reducible(const FlowGraph& g, const DomTree& d);

/// Low-high order on a reducible flow graph: delete dominator-back arcs,
/// process vertices in a topological order of the residual DAG, and place
/// each vertex among its siblings next to a witness derived arc. Throws
/// NotReducible, or MissingWitnessArcs(v) when d is not the dominator tree.
LowHighOrder lowhigh_reducible(const FlowGraph& g, const DomTree& d);

/// Per-vertex record of the choices made while ordering with the loop
/// nesting forest; filled when a trace sink is passed.
struct LoopOrderStep {
    Vertex vertex = kNoVertex;
    bool had_pivot = false;        // pivot was assigned by an earlier interval walk
    Arc pivot{kNoVertex, kNoVertex};
    Arc test{kNoVertex, kNoVertex};  // (kNoVertex, kNoVertex) when unused
    std::vector<Vertex> interval_path;  // z, ..., u when the walk ran
};
using LoopOrderTrace = std::vector<LoopOrderStep>;

/// Low-high order on an arbitrary flow graph from its loop nesting forest:
/// vertices in increasing reverse postorder, pivot and test arcs choosing the
/// insertion side, interval walks seeding pivots inside each loop. Throws
/// MissingTestArc(u) when d is not the dominator tree.
LowHighOrder lowhigh_from_loops(const FlowGraph& g, const DomTree& d,
                                const LoopForest& lf, LoopOrderTrace* trace = nullptr);

/// Low-high order from two independent spanning trees: normalize parents to
/// d(v) where that arc exists, pass to the derived graph, then repeatedly
/// peel a vertex whose derived in-degree exceeds its child count, splicing
/// its child past it; insertions replay in reverse peel order. Throws
/// NoPeelableVertex when the pair is not independent.
LowHighOrder lowhigh_from_trees(const FlowGraph& g, const DomTree& d, const TreePair& pair);

}  // namespace domcert

#endif
