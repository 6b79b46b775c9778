#ifndef DOMCERT_CERTIFIER_HPP
#define DOMCERT_CERTIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "domcert/graph.hpp"
#include "domcert/tree.hpp"

namespace domcert {

/// Unverified claim: a parent map said to be the dominator tree, and a vertex
/// numbering said to be a low-high order of it. parent[s] is ignored;
/// rank[s] is expected to be 1.
struct DomCertificate {
    std::vector<Vertex> claimed_parent;
    std::vector<Vertex> claimed_rank;
};

struct Violation {
    enum class Kind { kNotATree, kNotPreorder, kParentProperty, kLowHigh };
    Kind kind;
    Vertex vertex = kNoVertex;  // witness for every kind except kParentProperty
    ArcId arc = kNoArc;        // witness arc for kParentProperty

    std::string to_string() const;
};

struct Verdict {
    bool accepted = false;
    std::optional<Violation> violation;

    static Verdict accept() { return {true, std::nullopt}; }
    static Verdict reject(Violation v) { return {false, v}; }
};

/// The verifier: checks that the claimed parent map is a tree rooted at s,
/// that the claimed numbering is one of its preorders, that every arc
/// satisfies the parent property, and that every vertex has the entering
/// arcs the low-high condition demands. Accepting proves the tree is the
/// dominator tree. Hostile input welcome; all failures are verdicts, never
/// exceptions. O(m + n), no recursion.
Verdict verify(const FlowGraph& g, const DomCertificate& cert);

/// Parent property alone: for every arc (v, w), t(w) is an ancestor of w's
/// tail in t.
Verdict check_parent_property(const FlowGraph& g, const RootedTree& t);

/// True iff the root is the parent of every other vertex. Verifying that a
/// dominator tree is flat is the 2-vertex-connectivity primitive.
bool is_flat(const RootedTree& t);

}  // namespace domcert

#endif
