#include "domcert/certifier.hpp"

namespace domcert {

std::string Violation::to_string() const {
    switch (kind) {
        case Kind::kNotATree:
            return "NotATree " + std::to_string(vertex);
        case Kind::kNotPreorder:
            return "NotPreorder " + std::to_string(vertex);
        case Kind::kParentProperty:
            return "ParentPropertyViolation " + std::to_string(arc);
        case Kind::kLowHigh:
            return "LowHighViolation " + std::to_string(vertex);
    }
    return "?";
}

Verdict verify(const FlowGraph& g, const DomCertificate& cert) {
    const auto n = static_cast<size_t>(g.vertex_count());
    const Vertex s = g.start();
    const auto& parent = cert.claimed_parent;
    const auto& rank = cert.claimed_rank;

    auto not_a_tree = [](Vertex v) {
        return Verdict::reject({Violation::Kind::kNotATree, v, kNoArc});
    };
    auto not_preorder = [](Vertex v) {
        return Verdict::reject({Violation::Kind::kNotPreorder, v, kNoArc});
    };

    // Step 1: the parent function must be defined, in range, for all v != s.
    if (parent.size() != n || rank.size() != n) return not_a_tree(s);
    for (size_t v = 0; v < n; ++v) {
        if (static_cast<Vertex>(v) == s) continue;
        if (parent[v] < 0 || parent[v] >= static_cast<Vertex>(n) ||
            parent[v] == static_cast<Vertex>(v))
            return not_a_tree(static_cast<Vertex>(v));
    }

    // The numbering must be a permutation of 1..n with s first.
    std::vector<Vertex> by_rank(n, kNoVertex);
    for (size_t v = 0; v < n; ++v) {
        Vertex r = rank[v];
        if (r < 1 || r > static_cast<Vertex>(n)) return not_preorder(static_cast<Vertex>(v));
        if (by_rank[static_cast<size_t>(r - 1)] != kNoVertex)
            return not_preorder(static_cast<Vertex>(v));
        by_rank[static_cast<size_t>(r - 1)] = static_cast<Vertex>(v);
    }
    if (by_rank[0] != s) return not_preorder(s);

    // Step 2: children in increasing rank, then one traversal checks that the
    // claimed numbering is the preorder it generates, computes sizes, and
    // proves there are no cycles (a cycle leaves vertices unvisited).
    std::vector<ArcId> first(n + 1, 0);
    for (size_t v = 0; v < n; ++v)
        if (static_cast<Vertex>(v) != s) ++first[static_cast<size_t>(parent[v]) + 1];
    for (size_t v = 0; v < n; ++v) first[v + 1] += first[v];
    std::vector<Vertex> child(n > 0 ? n - 1 : 0);
    {
        std::vector<ArcId> pos(first.begin(), first.end() - 1);
        for (size_t k = 0; k < n; ++k) {  // increasing rank
            Vertex v = by_rank[k];
            if (v == s) continue;
            child[static_cast<size_t>(pos[static_cast<size_t>(parent[static_cast<size_t>(v)])]++)] = v;
        }
    }
    std::vector<Vertex> size(n, 1);
    {
        std::vector<char> visited(n, 0);
        std::vector<std::pair<Vertex, ArcId>> stack;
        Vertex counter = 0;
        if (rank[static_cast<size_t>(s)] != ++counter) return not_preorder(s);
        visited[static_cast<size_t>(s)] = 1;
        stack.emplace_back(s, first[static_cast<size_t>(s)]);
        while (!stack.empty()) {
            auto& [v, it] = stack.back();
            if (it < first[static_cast<size_t>(v) + 1]) {
                Vertex w = child[static_cast<size_t>(it++)];
                if (rank[static_cast<size_t>(w)] != ++counter) return not_preorder(w);
                visited[static_cast<size_t>(w)] = 1;
                stack.emplace_back(w, first[static_cast<size_t>(w)]);
            } else {
                Vertex done = v;
                stack.pop_back();
                if (!stack.empty())
                    size[static_cast<size_t>(stack.back().first)] +=
                        size[static_cast<size_t>(done)];
            }
        }
        if (counter != static_cast<Vertex>(n)) {
            // a parent cycle keeps the traversal from reaching everything
            for (size_t v = 0; v < n; ++v)
                if (!visited[v]) return not_a_tree(static_cast<Vertex>(v));
        }
    }

    auto is_ancestor = [&](Vertex v, Vertex w) {
        return rank[static_cast<size_t>(v)] <= rank[static_cast<size_t>(w)] &&
               rank[static_cast<size_t>(w)] <
                   rank[static_cast<size_t>(v)] + size[static_cast<size_t>(v)];
    };

    // Step 3: parent property per arc, low-high witnesses per vertex.
    for (ArcId a = 0; a < g.arc_count(); ++a) {
        Vertex w = g.head(a);  // never s
        if (!is_ancestor(parent[static_cast<size_t>(w)], g.tail(a)))
            return Verdict::reject({Violation::Kind::kParentProperty, kNoVertex, a});
    }
    for (size_t v = 0; v < n; ++v) {
        if (static_cast<Vertex>(v) == s) continue;
        bool tree_arc = false, lower = false, higher = false;
        for (ArcId a : g.in_arcs(static_cast<Vertex>(v))) {
            Vertex u = g.tail(a);
            if (u == parent[v]) {
                tree_arc = true;
                break;
            }
            if (rank[static_cast<size_t>(u)] < rank[v])
                lower = true;
            else if (rank[static_cast<size_t>(u)] > rank[v] &&
                     !is_ancestor(static_cast<Vertex>(v), u))
                higher = true;
            if (lower && higher) break;
        }
        if (!(tree_arc || (lower && higher)))
            return Verdict::reject({Violation::Kind::kLowHigh, static_cast<Vertex>(v), kNoArc});
    }
    return Verdict::accept();
}

Verdict check_parent_property(const FlowGraph& g, const RootedTree& t) {
    for (ArcId a = 0; a < g.arc_count(); ++a) {
        Vertex w = g.head(a);
        Vertex p = t.parent[static_cast<size_t>(w)];
        if (p == kNoVertex || !t.is_ancestor(p, g.tail(a)))
            return Verdict::reject({Violation::Kind::kParentProperty, kNoVertex, a});
    }
    return Verdict::accept();
}

bool is_flat(const RootedTree& t) {
    for (size_t v = 0; v < t.parent.size(); ++v)
        if (static_cast<Vertex>(v) != t.root && t.parent[v] != t.root) return false;
    return true;
}

}  // namespace domcert
