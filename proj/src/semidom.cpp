#include "domcert/semidom.hpp"

namespace domcert {

namespace {

// Eval/link forest over preorder numbers with path compression. label_ holds
// the vertex minimizing (semi, vertex) lexicographically on the path to the
// forest root, so ties go to the vertex closest to the root.
struct EvalForest {
    std::vector<Vertex> ancestor;  // 0 = unlinked
    std::vector<Vertex> label;
    std::vector<Vertex> semi;
    std::vector<Vertex> scratch;

    explicit EvalForest(size_t n)
        : ancestor(n + 1, 0), label(n + 1), semi(n + 1) {
        for (size_t v = 0; v <= n; ++v) {
            label[v] = static_cast<Vertex>(v);
            semi[v] = static_cast<Vertex>(v);
        }
    }

    bool better(Vertex a, Vertex b) const {  // (semi, id) lexicographic
        return semi[static_cast<size_t>(a)] < semi[static_cast<size_t>(b)] ||
               (semi[static_cast<size_t>(a)] == semi[static_cast<size_t>(b)] && a < b);
    }

    void compress(Vertex v) {
        scratch.clear();
        while (ancestor[static_cast<size_t>(ancestor[static_cast<size_t>(v)])] != 0) {
            scratch.push_back(v);
            v = ancestor[static_cast<size_t>(v)];
        }
        for (size_t i = scratch.size(); i-- > 0;) {
            Vertex x = scratch[i];
            Vertex a = ancestor[static_cast<size_t>(x)];
            if (better(label[static_cast<size_t>(a)], label[static_cast<size_t>(x)]))
                label[static_cast<size_t>(x)] = label[static_cast<size_t>(a)];
            ancestor[static_cast<size_t>(x)] = ancestor[static_cast<size_t>(a)];
        }
    }

    Vertex eval(Vertex v) {
        if (ancestor[static_cast<size_t>(v)] == 0) return v;
        compress(v);
        return label[static_cast<size_t>(v)];
    }

    void link(Vertex parent, Vertex child) { ancestor[static_cast<size_t>(child)] = parent; }
};

}  // namespace

SemiDomInfo compute_semidominators(const FlowGraph& g, const DfsInfo& d) {
    if (d.graph_stamp != g.stamp())
        throw MismatchedInputs("DfsInfo does not belong to this graph");
    const auto n = static_cast<size_t>(g.vertex_count());

    SemiDomInfo info;
    info.dfs = d;
    info.sd.assign(n, kNoVertex);
    info.rd.assign(n, kNoVertex);
    info.g.assign(n, kNoVertex);
    info.g_arc.assign(n, kNoArc);

    // Work in preorder numbers 1..n.
    EvalForest forest(n);
    std::vector<Vertex> g_of(n + 1, 0);       // chosen last-arc tail, by preorder number
    std::vector<ArcId> g_arc_of(n + 1, kNoArc);
    std::vector<Vertex> rd_of(n + 1, 0);
    std::vector<Vertex> bucket_head(n + 1, 0), bucket_next(n + 1, 0);

    auto parent_pre = [&](Vertex w_pre) {
        Vertex v = d.by_pre[static_cast<size_t>(w_pre - 1)];
        return d.pre[static_cast<size_t>(d.parent[static_cast<size_t>(v)])];
    };

    for (Vertex w_pre = static_cast<Vertex>(n); w_pre >= 2; --w_pre) {
        Vertex w = d.by_pre[static_cast<size_t>(w_pre - 1)];
        for (ArcId a : g.in_arcs(w)) {
            Vertex u = g.tail(a);
            Vertex u_pre = d.pre[static_cast<size_t>(u)];
            Vertex x = forest.eval(u_pre);
            Vertex cand = forest.semi[static_cast<size_t>(x)];
            if (cand < forest.semi[static_cast<size_t>(w_pre)]) {
                forest.semi[static_cast<size_t>(w_pre)] = cand;
                g_of[static_cast<size_t>(w_pre)] = u_pre;
                g_arc_of[static_cast<size_t>(w_pre)] = a;
            }
        }
        Vertex s_pre = forest.semi[static_cast<size_t>(w_pre)];
        bucket_next[static_cast<size_t>(w_pre)] = bucket_head[static_cast<size_t>(s_pre)];
        bucket_head[static_cast<size_t>(s_pre)] = w_pre;

        Vertex p = parent_pre(w_pre);
        forest.link(p, w_pre);
        // Vertices with semi-dominator p: eval now sweeps exactly F(p, v].
        for (Vertex v = bucket_head[static_cast<size_t>(p)]; v != 0;) {
            rd_of[static_cast<size_t>(v)] = forest.eval(v);
            v = bucket_next[static_cast<size_t>(v)];
        }
        bucket_head[static_cast<size_t>(p)] = 0;
    }
    rd_of[1] = 1;

    info.sd[static_cast<size_t>(d.root)] = d.root;
    info.rd[static_cast<size_t>(d.root)] = d.root;
    for (Vertex v_pre = 2; v_pre <= static_cast<Vertex>(n); ++v_pre) {
        Vertex v = d.by_pre[static_cast<size_t>(v_pre - 1)];
        info.sd[static_cast<size_t>(v)] =
            d.by_pre[static_cast<size_t>(forest.semi[static_cast<size_t>(v_pre)] - 1)];
        info.rd[static_cast<size_t>(v)] =
            d.by_pre[static_cast<size_t>(rd_of[static_cast<size_t>(v_pre)] - 1)];
        info.g[static_cast<size_t>(v)] =
            d.by_pre[static_cast<size_t>(g_of[static_cast<size_t>(v_pre)] - 1)];
        info.g_arc[static_cast<size_t>(v)] = g_arc_of[static_cast<size_t>(v_pre)];
    }
    return info;
}

DomTree dominators_from_semis(const SemiDomInfo& info) {
    const DfsInfo& d = info.dfs;
    const auto n = d.parent.size();
    std::vector<Vertex> idom(n, kNoVertex);
    for (size_t k = 1; k < n; ++k) {
        Vertex v = d.by_pre[k];
        Vertex r = info.rd[static_cast<size_t>(v)];
        if (info.sd[static_cast<size_t>(v)] == info.sd[static_cast<size_t>(r)])
            idom[static_cast<size_t>(v)] = info.sd[static_cast<size_t>(v)];
        else
            idom[static_cast<size_t>(v)] = idom[static_cast<size_t>(r)];
    }
    return tree_from_parents(d.root, idom);
}

std::pair<DomTree, SemiDomInfo> compute_dominator_tree(const FlowGraph& g) {
    DfsInfo d = dfs(g);
    SemiDomInfo info = compute_semidominators(g, d);
    DomTree t = dominators_from_semis(info);
    return {std::move(t), std::move(info)};
}

}  // namespace domcert
