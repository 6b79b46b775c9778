#ifndef DOMCERT_BRUTE_HPP
#define DOMCERT_BRUTE_HPP

#include <vector>

#include "domcert/graph.hpp"
#include "domcert/tree.hpp"
#include "domcert/trees.hpp"

namespace domcert {

// Slow reference implementations working straight from the definitions.
// They back the property tests and the --check flags; never on the fast path.

/// Dominator tree by vertex deletion: u dominates w iff w is unreachable
/// from s once u is removed. O(n*m).
DomTree oracle_dominators(const FlowGraph& g);

/// Checks the low-high definition directly: order is a preorder of d, and
/// each v != s has the tree arc or a straddling pair of entering arcs.
bool oracle_is_low_high(const FlowGraph& g, const RootedTree& d,
                        std::span<const Vertex> order);

/// Materializes both root paths for every vertex and intersects them against
/// the dominator set. Rejects parent maps that are not spanning trees of g.
bool oracle_independent(const FlowGraph& g, const RootedTree& d, const TreePair& pair);

/// If the pair is independent but not strongly independent, *witness (when
/// given) receives an offending vertex pair.
bool oracle_strongly_independent(const FlowGraph& g, const RootedTree& d,
                                 const TreePair& pair,
                                 std::pair<Vertex, Vertex>* witness = nullptr);

/// Arc ids whose deletion makes their head unreachable. O(m^2).
std::vector<ArcId> oracle_bridges(const FlowGraph& g);

}  // namespace domcert

#endif
