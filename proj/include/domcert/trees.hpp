#ifndef DOMCERT_TREES_HPP
#define DOMCERT_TREES_HPP

#include <optional>
#include <vector>

#include "domcert/graph.hpp"
#include "domcert/lowhigh_order.hpp"
#include "domcert/semidom.hpp"
#include "domcert/tree.hpp"

namespace domcert {

enum class TreeColor : unsigned char { kNone = 0, kBlue = 1, kRed = 2 };

/// Two spanning trees rooted at s, as parent maps. When the trees were built
/// from concrete arcs the arc ids are kept so arc-disjointness is meaningful
/// in multigraphs.
struct TreePair {
    std::vector<Vertex> b;  // parent in B; kNoVertex at s
    std::vector<Vertex> r;  // parent in R
    std::vector<ArcId> b_arc, r_arc;       // kNoArc when unknown
    std::vector<TreeColor> color;          // filled by the semi-dominator construction

    static TreePair from_parents(std::vector<Vertex> b, std::vector<Vertex> r);
};

/// Picks b(v), r(v) per vertex from the entering arcs using the low-high
/// numbering: two straddling arcs if possible, else the tree arc paired with
/// a lower arc, else the tree arc alone. The result is strongly independent.
/// Throws InvalidLowHigh(v) when no case applies, which certifies that the
/// given order is not low-high.
TreePair build_strongly_independent(const FlowGraph& g, const DomTree& d,
                                    const LowHighOrder& lh);

/// Blue/red construction from semi-dominators: v is blue iff
/// sd(v) = sd(rd(v)) or rd(v) is red; blue takes b(v)=g(v), r(v)=f(v), red
/// swaps them. The trees are independent.
TreePair build_from_semidominators(const FlowGraph& g, const SemiDomInfo& info);

/// True iff every arc shared by B and R is a bridge. Uses the arc-deletion
/// bridge oracle, so test scale only.
bool check_arc_disjoint_except_bridges(const FlowGraph& g, const TreePair& pair);

}  // namespace domcert

#endif
