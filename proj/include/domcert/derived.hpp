#ifndef DOMCERT_DERIVED_HPP
#define DOMCERT_DERIVED_HPP

#include <span>
#include <utility>
#include <vector>

#include "domcert/graph.hpp"
#include "domcert/tree.hpp"

namespace domcert {

/// Derived graph of G with respect to a tree T with the parent property.
/// The derived arc of (v, w) is null if w is an ancestor of v; otherwise its
/// tail is v itself when v = t(w), and the sibling of w that is an ancestor
/// of v when not. Every derived arc leads from a vertex to a child or
/// sibling in T. Duplicates are retained; origin/inverse keep the
/// per-original correspondence.
struct DerivedGraph {
    std::vector<Vertex> derived_tail;  // per original arc; kNoVertex = null
    std::vector<std::pair<Vertex, Vertex>> arcs;  // non-null (tail', head)
    std::vector<ArcId> origin;                    // arcs[i] came from origin[i]
    std::vector<ArcId> inverse;  // original arc -> index into arcs, or kNoArc
};

/// Resolves the derived tails of an arbitrary arc list against T by the
/// triple radix sort: sort triples (t(w), v, w) together with sentinels
/// (t(u), u, 0) lexicographically, then sweep tracking the current sibling.
/// O(len + n). Throws ParentPropertyError if some arc (v, w) has t(w) not an
/// ancestor of v.
std::vector<Vertex> derived_tails(std::span<const Arc> arcs, const RootedTree& t);

DerivedGraph compute_derived(const FlowGraph& g, const RootedTree& t);

}  // namespace domcert

#endif
