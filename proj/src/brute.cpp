#include "domcert/brute.hpp"

#include <algorithm>

namespace domcert {

namespace {

// Vertices reachable from s skipping `banned_vertex` (or using all vertices
// when kNoVertex) and skipping arc `banned_arc`.
std::vector<char> reachable(const FlowGraph& g, Vertex banned_vertex, ArcId banned_arc) {
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    if (g.start() == banned_vertex) return seen;
    std::vector<Vertex> stack{g.start()};
    seen[static_cast<size_t>(g.start())] = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (ArcId a : g.out_arcs(v)) {
            if (a == banned_arc) continue;
            Vertex w = g.head(a);
            if (w == banned_vertex || seen[static_cast<size_t>(w)]) continue;
            seen[static_cast<size_t>(w)] = 1;
            stack.push_back(w);
        }
    }
    return seen;
}

// Root path in a parent map, ending at the root; empty when the map is
// cyclic or escapes the graph (cycle guard after n steps).
std::vector<Vertex> root_path(const std::vector<Vertex>& parent, Vertex root, Vertex v,
                              size_t n) {
    std::vector<Vertex> path;
    Vertex x = v;
    for (size_t steps = 0; steps <= n; ++steps) {
        path.push_back(x);
        if (x == root) {
            std::reverse(path.begin(), path.end());
            return path;
        }
        if (x < 0 || x >= static_cast<Vertex>(n)) break;
        x = parent[static_cast<size_t>(x)];
        if (x < 0 || x >= static_cast<Vertex>(n)) break;
    }
    return {};
}

}  // namespace

DomTree oracle_dominators(const FlowGraph& g) {
    const auto n = static_cast<size_t>(g.vertex_count());
    // dominated[u] = set of vertices unreachable once u is deleted.
    std::vector<std::vector<char>> dominated(n);
    std::vector<int> depth(n, 0);  // |dominator set of v|
    for (size_t u = 0; u < n; ++u) {
        std::vector<char> seen = reachable(g, static_cast<Vertex>(u), kNoArc);
        dominated[u].assign(n, 0);
        for (size_t w = 0; w < n; ++w)
            if (!seen[w]) {
                dominated[u][w] = 1;
                ++depth[w];
            }
    }
    std::vector<Vertex> idom(n, kNoVertex);
    for (size_t v = 0; v < n; ++v) {
        if (static_cast<Vertex>(v) == g.start()) continue;
        // Immediate dominator: the deepest strict dominator.
        Vertex best = kNoVertex;
        for (size_t u = 0; u < n; ++u) {
            if (u == v || !dominated[u][v]) continue;
            if (best == kNoVertex || depth[u] > depth[static_cast<size_t>(best)])
                best = static_cast<Vertex>(u);
        }
        idom[v] = best;
    }
    return tree_from_parents(g.start(), idom);
}

bool oracle_is_low_high(const FlowGraph& g, const RootedTree& d,
                        std::span<const Vertex> order) {
    const auto n = static_cast<size_t>(g.vertex_count());
    if (order.size() != n || d.parent.size() != n) return false;

    // order must be a permutation 1..n ...
    std::vector<Vertex> by_order(n, kNoVertex);
    for (size_t v = 0; v < n; ++v) {
        Vertex r = order[v];
        if (r < 1 || r > static_cast<Vertex>(n) || by_order[static_cast<size_t>(r - 1)] != kNoVertex)
            return false;
        by_order[static_cast<size_t>(r - 1)] = static_cast<Vertex>(v);
    }
    if (by_order[0] != d.root) return false;

    // ... and a preorder of d: every subtree occupies the interval
    // [order(v), order(v) + size(v)) with v first.
    std::vector<Vertex> lo(n), hi(n), cnt(n, 1);
    for (size_t v = 0; v < n; ++v) lo[v] = hi[v] = order[v];
    for (size_t k = n; k-- > 1;) {
        Vertex v = by_order[k];
        Vertex p = d.parent[static_cast<size_t>(v)];
        if (p < 0 || p >= static_cast<Vertex>(n)) return false;
        if (order[static_cast<size_t>(p)] >= order[static_cast<size_t>(v)]) return false;
        lo[static_cast<size_t>(p)] = std::min(lo[static_cast<size_t>(p)], lo[static_cast<size_t>(v)]);
        hi[static_cast<size_t>(p)] = std::max(hi[static_cast<size_t>(p)], hi[static_cast<size_t>(v)]);
        cnt[static_cast<size_t>(p)] += cnt[static_cast<size_t>(v)];
    }
    for (size_t v = 0; v < n; ++v)
        if (lo[v] != order[v] || hi[v] != order[v] + cnt[v] - 1) return false;

    auto descendant_of_v = [&](Vertex v, Vertex w) {
        return order[static_cast<size_t>(w)] >= order[static_cast<size_t>(v)] &&
               order[static_cast<size_t>(w)] < order[static_cast<size_t>(v)] + cnt[static_cast<size_t>(v)];
    };

    // Low-high condition per vertex, straight from the definition.
    for (size_t v = 0; v < n; ++v) {
        if (static_cast<Vertex>(v) == d.root) continue;
        Vertex tv = d.parent[v];
        bool tree_arc = false, lower = false, higher = false;
        for (ArcId a : g.in_arcs(static_cast<Vertex>(v))) {
            Vertex u = g.tail(a);
            if (u == tv) tree_arc = true;
            if (order[static_cast<size_t>(u)] < order[v]) lower = true;
            if (order[static_cast<size_t>(u)] > order[v] &&
                !descendant_of_v(static_cast<Vertex>(v), u))
                higher = true;
        }
        if (!(tree_arc || (lower && higher))) return false;
    }
    return true;
}

namespace {

bool arcs_exist(const FlowGraph& g, const std::vector<Vertex>& parent) {
    for (size_t v = 0; v < static_cast<size_t>(g.vertex_count()); ++v) {
        if (static_cast<Vertex>(v) == g.start()) continue;
        if (parent[v] == kNoVertex || !g.has_arc(parent[v], static_cast<Vertex>(v)))
            return false;
    }
    return true;
}

}  // namespace

bool oracle_independent(const FlowGraph& g, const RootedTree& d, const TreePair& pair) {
    const auto n = static_cast<size_t>(g.vertex_count());
    if (pair.b.size() != n || pair.r.size() != n) return false;
    if (!arcs_exist(g, pair.b) || !arcs_exist(g, pair.r)) return false;

    for (size_t v = 0; v < n; ++v) {
        std::vector<Vertex> pb = root_path(pair.b, g.start(), static_cast<Vertex>(v), n);
        std::vector<Vertex> pr = root_path(pair.r, g.start(), static_cast<Vertex>(v), n);
        if (pb.empty() || pr.empty()) return false;
        std::vector<char> on_b(n, 0);
        for (Vertex x : pb) on_b[static_cast<size_t>(x)] = 1;
        for (Vertex x : pr)
            if (on_b[static_cast<size_t>(x)] && !d.is_ancestor(x, static_cast<Vertex>(v)))
                return false;  // shared vertex that is not a dominator of v
    }
    return true;
}

bool oracle_strongly_independent(const FlowGraph& g, const RootedTree& d,
                                 const TreePair& pair, std::pair<Vertex, Vertex>* witness) {
    const auto n = static_cast<size_t>(g.vertex_count());
    if (!oracle_independent(g, d, pair)) return false;

    std::vector<std::vector<Vertex>> pb(n), pr(n);
    for (size_t v = 0; v < n; ++v) {
        pb[v] = root_path(pair.b, g.start(), static_cast<Vertex>(v), n);
        pr[v] = root_path(pair.r, g.start(), static_cast<Vertex>(v), n);
    }
    std::vector<char> mark(n, 0);
    auto shares_non_common_dominator = [&](const std::vector<Vertex>& p1, size_t v,
                                           const std::vector<Vertex>& p2, size_t w) {
        for (Vertex x : p1) mark[static_cast<size_t>(x)] = 1;
        bool bad = false;
        for (Vertex x : p2) {
            if (mark[static_cast<size_t>(x)] &&
                !(d.is_ancestor(x, static_cast<Vertex>(v)) &&
                  d.is_ancestor(x, static_cast<Vertex>(w)))) {
                bad = true;
                break;
            }
        }
        for (Vertex x : p1) mark[static_cast<size_t>(x)] = 0;
        return bad;
    };
    for (size_t v = 0; v < n; ++v) {
        for (size_t w = v + 1; w < n; ++w) {
            bool bad_bv_rw = shares_non_common_dominator(pb[v], v, pr[w], w);
            bool bad_rv_bw = shares_non_common_dominator(pr[v], v, pb[w], w);
            if (bad_bv_rw && bad_rv_bw) {
                if (witness) *witness = {static_cast<Vertex>(v), static_cast<Vertex>(w)};
                return false;
            }
        }
    }
    return true;
}

std::vector<ArcId> oracle_bridges(const FlowGraph& g) {
    std::vector<ArcId> bridges;
    for (ArcId a = 0; a < g.arc_count(); ++a) {
        std::vector<char> seen = reachable(g, kNoVertex, a);
        if (!seen[static_cast<size_t>(g.head(a))]) bridges.push_back(a);
    }
    return bridges;
}

}  // namespace domcert
