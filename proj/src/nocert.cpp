#include "domcert/nocert.hpp"

#include <optional>

#include "domcert/derived.hpp"
#include "domcert/dfs.hpp"
#include "domcert/loop_forest.hpp"

namespace domcert {

namespace {

// Builds an ordered tree from a claimed parent map; nullopt (with a witness)
// when the links are not a tree rooted at s.
std::optional<RootedTree> checked_tree(const FlowGraph& g,
                                       std::span<const Vertex> claimed_parent,
                                       Vertex* witness) {
    const auto n = static_cast<size_t>(g.vertex_count());
    if (claimed_parent.size() != n) {
        *witness = g.start();
        return std::nullopt;
    }
    std::vector<Vertex> parent(claimed_parent.begin(), claimed_parent.end());
    parent[static_cast<size_t>(g.start())] = kNoVertex;
    for (size_t v = 0; v < n; ++v) {
        if (static_cast<Vertex>(v) == g.start()) continue;
        if (parent[v] < 0 || parent[v] >= static_cast<Vertex>(n) ||
            parent[v] == static_cast<Vertex>(v)) {
            *witness = static_cast<Vertex>(v);
            return std::nullopt;
        }
    }
    try {
        return tree_from_parents(g.start(), parent);
    } catch (const MismatchedInputs&) {
        *witness = g.start();
        return std::nullopt;
    }
}

std::optional<DerivedGraph> checked_derived(const FlowGraph& g, const RootedTree& t,
                                            ArcId* witness) {
    try {
        return compute_derived(g, t);
    } catch (const ParentPropertyError& e) {
        *witness = e.arc;
        return std::nullopt;
    }
}

}  // namespace

Verdict verify_reducible_nocert(const FlowGraph& g, std::span<const Vertex> claimed_parent) {
    Vertex bad_vertex = kNoVertex;
    auto tree = checked_tree(g, claimed_parent, &bad_vertex);
    if (!tree) return Verdict::reject({Violation::Kind::kNotATree, bad_vertex, kNoArc});

    ArcId bad_arc = kNoArc;
    auto dg = checked_derived(g, *tree, &bad_arc);
    if (!dg) return Verdict::reject({Violation::Kind::kParentProperty, kNoVertex, bad_arc});

    // The residual graph (arcs into claimed ancestors removed) must be
    // acyclic; the claimed ancestors dominate by the parent property, so
    // fewer arcs are deleted than true reducibility allows.
    {
        const auto n = static_cast<size_t>(g.vertex_count());
        std::vector<char> state(n, 0);
        std::vector<std::pair<Vertex, size_t>> stack;
        stack.emplace_back(g.start(), 0);
        state[static_cast<size_t>(g.start())] = 1;
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            auto arcs = g.out_arcs(v);
            bool descended = false;
            while (i < arcs.size()) {
                ArcId a = arcs[i++];
                if (dg->derived_tail[static_cast<size_t>(a)] == kNoVertex) continue;
                Vertex w = g.head(a);
                if (state[static_cast<size_t>(w)] == 1) throw NotReducible();
                if (state[static_cast<size_t>(w)] == 0) {
                    state[static_cast<size_t>(w)] = 1;
                    stack.emplace_back(w, 0);
                    descended = true;
                    break;
                }
            }
            if (!descended && i >= arcs.size()) {
                state[static_cast<size_t>(v)] = 2;
                stack.pop_back();
            }
        }
    }

    // Per vertex: tree arc present, or two derived arcs with distinct tails.
    const auto n = static_cast<size_t>(g.vertex_count());
    for (size_t v = 0; v < n; ++v) {
        if (static_cast<Vertex>(v) == g.start()) continue;
        bool tree_arc = false;
        Vertex one = kNoVertex;
        bool two = false;
        for (ArcId a : g.in_arcs(static_cast<Vertex>(v))) {
            if (g.tail(a) == tree->parent[v]) {
                tree_arc = true;
                break;
            }
            Vertex t = dg->derived_tail[static_cast<size_t>(a)];
            if (t == kNoVertex) continue;
            if (one == kNoVertex)
                one = t;
            else if (t != one)
                two = true;
        }
        if (!tree_arc && !two)
            return Verdict::reject({Violation::Kind::kLowHigh, static_cast<Vertex>(v), kNoArc});
    }
    return Verdict::accept();
}

Verdict verify_loops_nocert(const FlowGraph& g, std::span<const Vertex> claimed_parent) {
    Vertex bad_vertex = kNoVertex;
    auto tree = checked_tree(g, claimed_parent, &bad_vertex);
    if (!tree) return Verdict::reject({Violation::Kind::kNotATree, bad_vertex, kNoArc});

    ArcId bad_arc = kNoArc;
    auto dg = checked_derived(g, *tree, &bad_arc);
    if (!dg) return Verdict::reject({Violation::Kind::kParentProperty, kNoVertex, bad_arc});

    DfsInfo fd = dfs(g);
    LoopForest lf = compute_loop_forest(g, fd);
    const auto n = static_cast<size_t>(g.vertex_count());

    // Best two entering derived arcs per loop subtree (distinct tails,
    // minimal original tail), merged bottom-up in the loop forest.
    struct Cand {
        Vertex y = kNoVertex;
        ArcId arc = kNoArc;
        Vertex dtail = kNoVertex;
        bool ok() const { return arc != kNoArc; }
        bool operator<(const Cand& o) const { return y < o.y || (y == o.y && arc < o.arc); }
    };
    struct Best2 {
        Cand a1, a2;
        void offer(Cand c) {
            if (!a1.ok())
                a1 = c;
            else if (c.dtail == a1.dtail) {
                if (c < a1) a1 = c;
            } else if (c < a1) {
                a2 = a1;
                a1 = c;
            } else if (!a2.ok() || c < a2) {
                a2 = c;
            }
        }
    };
    std::vector<Best2> cands(n);
    for (size_t k = n; k-- > 1;) {
        Vertex u = fd.by_rpost[k];
        Vertex u_r = fd.rpost[static_cast<size_t>(u)];
        for (ArcId a : g.in_arcs(u)) {
            Vertex y_r = fd.rpost[static_cast<size_t>(g.tail(a))];
            if (y_r < u_r && dg->derived_tail[static_cast<size_t>(a)] != kNoVertex)
                cands[static_cast<size_t>(u)].offer(
                    {y_r, a, dg->derived_tail[static_cast<size_t>(a)]});
        }
        Vertex h = lf.header[static_cast<size_t>(u)];
        if (h == kNoVertex) continue;
        Vertex h_r = fd.rpost[static_cast<size_t>(h)];
        for (const Cand& c : {cands[static_cast<size_t>(u)].a1, cands[static_cast<size_t>(u)].a2})
            if (c.ok() && c.y < h_r) cands[static_cast<size_t>(h)].offer(c);
    }

    for (size_t k = 1; k < n; ++k) {
        Vertex u = fd.by_rpost[k];
        if (fd.parent[static_cast<size_t>(u)] == tree->parent[static_cast<size_t>(u)]) continue;
        Vertex f_tail = dg->derived_tail[static_cast<size_t>(fd.parent_arc[static_cast<size_t>(u)])];
        const Best2& c = cands[static_cast<size_t>(u)];
        bool ok = (c.a1.ok() && c.a1.dtail != f_tail) || (c.a2.ok() && c.a2.dtail != f_tail);
        if (!ok) return Verdict::reject({Violation::Kind::kLowHigh, u, kNoArc});
    }
    return Verdict::accept();
}

}  // namespace domcert
