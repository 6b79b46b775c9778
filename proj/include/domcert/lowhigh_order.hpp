#ifndef DOMCERT_LOWHIGH_ORDER_HPP
#define DOMCERT_LOWHIGH_ORDER_HPP

#include <vector>

#include "domcert/tree.hpp"

namespace domcert {

/// A preorder of the dominator tree satisfying the low-high condition, kept
/// both as a numbering and as the ordered child lists that induce it.
struct LowHighOrder {
    std::vector<Vertex> rank;                   // 1..n
    std::vector<std::vector<Vertex>> children;  // per-vertex, in list order

    /// The dominator tree re-ordered by this numbering (for ancestor tests
    /// against the low-high ranks).
    RootedTree ordered_tree(const DomTree& d) const {
        return tree_with_order(d.root, d.parent, rank);
    }
};

}  // namespace domcert

#endif
