#include "domcert/trees.hpp"

#include <algorithm>

#include "domcert/brute.hpp"

namespace domcert {

TreePair TreePair::from_parents(std::vector<Vertex> b, std::vector<Vertex> r) {
    TreePair p;
    p.b = std::move(b);
    p.r = std::move(r);
    p.b_arc.assign(p.b.size(), kNoArc);
    p.r_arc.assign(p.r.size(), kNoArc);
    return p;
}

TreePair build_strongly_independent(const FlowGraph& g, const DomTree& d,
                                    const LowHighOrder& lh) {
    const auto n = static_cast<size_t>(g.vertex_count());
    RootedTree t = lh.ordered_tree(d);  // ancestor tests in low-high numbering

    TreePair pair;
    pair.b.assign(n, kNoVertex);
    pair.r.assign(n, kNoVertex);
    pair.b_arc.assign(n, kNoArc);
    pair.r_arc.assign(n, kNoArc);

    for (size_t v = 0; v < n; ++v) {
        if (static_cast<Vertex>(v) == g.start()) continue;
        Vertex tv = d.parent[v];
        Vertex rank_v = t.rank[v];

        ArcId low = kNoArc, high = kNoArc, tree = kNoArc, low_other = kNoArc;
        int low_count = 0;
        for (ArcId a : g.in_arcs(static_cast<Vertex>(v))) {
            Vertex u = g.tail(a);
            if (t.rank[static_cast<size_t>(u)] < rank_v) {
                ++low_count;
                if (low == kNoArc) low = a;
                if (tree == kNoArc && u == tv) tree = a;
                if (low_other == kNoArc && a != tree) low_other = a;
            } else if (high == kNoArc && !t.is_ancestor(static_cast<Vertex>(v), u)) {
                high = a;
            }
        }

        if (low != kNoArc && high != kNoArc) {
            // Case 1: two straddling arcs.
            pair.b[v] = g.tail(low);
            pair.b_arc[v] = low;
            pair.r[v] = g.tail(high);
            pair.r_arc[v] = high;
        } else if (tree != kNoArc && low_other != kNoArc) {
            // Case 2: the tree arc plus a second lower arc.
            pair.b[v] = g.tail(low_other);
            pair.b_arc[v] = low_other;
            pair.r[v] = tv;
            pair.r_arc[v] = tree;
        } else if (tree != kNoArc && high == kNoArc && low_count == 1) {
            // Case 3: the tree arc is the only arc from a non-descendant.
            pair.b[v] = pair.r[v] = tv;
            pair.b_arc[v] = pair.r_arc[v] = tree;
        } else {
            throw InvalidLowHigh(static_cast<Vertex>(v));
        }
    }
    return pair;
}

TreePair build_from_semidominators(const FlowGraph& g, const SemiDomInfo& info) {
    if (info.dfs.graph_stamp != g.stamp())
        throw MismatchedInputs("SemiDomInfo does not belong to this graph");
    const auto n = static_cast<size_t>(g.vertex_count());
    const DfsInfo& d = info.dfs;

    TreePair pair;
    pair.b.assign(n, kNoVertex);
    pair.r.assign(n, kNoVertex);
    pair.b_arc.assign(n, kNoArc);
    pair.r_arc.assign(n, kNoArc);
    pair.color.assign(n, TreeColor::kNone);

    for (size_t k = 1; k < n; ++k) {
        Vertex v = d.by_pre[k];
        Vertex rd = info.rd[static_cast<size_t>(v)];
        bool blue = info.sd[static_cast<size_t>(v)] == info.sd[static_cast<size_t>(rd)] ||
                    pair.color[static_cast<size_t>(rd)] == TreeColor::kRed;
        pair.color[static_cast<size_t>(v)] = blue ? TreeColor::kBlue : TreeColor::kRed;
        if (blue) {
            pair.b[static_cast<size_t>(v)] = info.g[static_cast<size_t>(v)];
            pair.b_arc[static_cast<size_t>(v)] = info.g_arc[static_cast<size_t>(v)];
            pair.r[static_cast<size_t>(v)] = d.parent[static_cast<size_t>(v)];
            pair.r_arc[static_cast<size_t>(v)] = d.parent_arc[static_cast<size_t>(v)];
        } else {
            pair.b[static_cast<size_t>(v)] = d.parent[static_cast<size_t>(v)];
            pair.b_arc[static_cast<size_t>(v)] = d.parent_arc[static_cast<size_t>(v)];
            pair.r[static_cast<size_t>(v)] = info.g[static_cast<size_t>(v)];
            pair.r_arc[static_cast<size_t>(v)] = info.g_arc[static_cast<size_t>(v)];
        }
    }
    return pair;
}

bool check_arc_disjoint_except_bridges(const FlowGraph& g, const TreePair& pair) {
    const auto n = static_cast<size_t>(g.vertex_count());
    std::vector<ArcId> shared;
    bool have_ids = pair.b_arc.size() == n && pair.r_arc.size() == n;
    for (size_t v = 0; v < n; ++v) {
        if (static_cast<Vertex>(v) == g.start()) continue;
        if (have_ids && pair.b_arc[v] != kNoArc && pair.r_arc[v] != kNoArc) {
            if (pair.b_arc[v] == pair.r_arc[v]) shared.push_back(pair.b_arc[v]);
        } else if (pair.b[v] == pair.r[v] && pair.b[v] != kNoVertex) {
            // identify the pair (b(v), v); any arc with these endpoints stands in
            for (ArcId a : g.in_arcs(static_cast<Vertex>(v)))
                if (g.tail(a) == pair.b[v]) {
                    shared.push_back(a);
                    break;
                }
        }
    }
    if (shared.empty()) return true;
    std::vector<ArcId> bridges = oracle_bridges(g);
    std::vector<char> is_bridge(static_cast<size_t>(g.arc_count()), 0);
    for (ArcId a : bridges) is_bridge[static_cast<size_t>(a)] = 1;
    return std::all_of(shared.begin(), shared.end(),
                       [&](ArcId a) { return is_bridge[static_cast<size_t>(a)]; });
}

}  // namespace domcert
