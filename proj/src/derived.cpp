#include "domcert/derived.hpp"

namespace domcert {

namespace {

struct Triple {
    Vertex k1, k2, k3;  // preorder numbers; k3 = 0 marks a sibling sentinel
    ArcId payload;      // arc index, or ~vertex for sentinels
};

// Stable LSD radix sort over three preorder-number keys, one counting pass each.
void radix_sort(std::vector<Triple>& items, Vertex n) {
    std::vector<Triple> tmp(items.size());
    std::vector<ArcId> count(static_cast<size_t>(n) + 2);
    auto pass = [&](auto key) {
        std::fill(count.begin(), count.end(), 0);
        for (const Triple& t : items) ++count[static_cast<size_t>(key(t)) + 1];
        for (size_t i = 1; i < count.size(); ++i) count[i] += count[i - 1];
        for (const Triple& t : items) tmp[static_cast<size_t>(count[static_cast<size_t>(key(t))]++)] = t;
        items.swap(tmp);
    };
    pass([](const Triple& t) { return t.k3; });
    pass([](const Triple& t) { return t.k2; });
    pass([](const Triple& t) { return t.k1; });
}

}  // namespace

std::vector<Vertex> derived_tails(std::span<const Arc> arcs, const RootedTree& t) {
    const Vertex n = t.n();
    std::vector<Vertex> out(arcs.size(), kNoVertex);

    std::vector<Triple> triples;
    triples.reserve(arcs.size() + static_cast<size_t>(n));
    for (size_t i = 0; i < arcs.size(); ++i) {
        auto [v, w] = arcs[i];
        if (w == t.root) throw ParentPropertyError(static_cast<ArcId>(i));
        if (t.is_ancestor(w, v)) continue;  // deleted (covers self-loops)
        Vertex p = t.parent[static_cast<size_t>(w)];
        if (!t.is_ancestor(p, v)) throw ParentPropertyError(static_cast<ArcId>(i));
        if (v == p) {
            out[i] = v;  // tree arc maps to itself
        } else {
            triples.push_back({t.rank[static_cast<size_t>(p)], t.rank[static_cast<size_t>(v)],
                               t.rank[static_cast<size_t>(w)], static_cast<ArcId>(i)});
        }
    }
    for (Vertex u = 0; u < n; ++u) {
        if (u == t.root) continue;
        Vertex p = t.parent[static_cast<size_t>(u)];
        triples.push_back({t.rank[static_cast<size_t>(p)], t.rank[static_cast<size_t>(u)], 0,
                           static_cast<ArcId>(~u)});
    }
    radix_sort(triples, n);

    // Sweep: sentinels set the current sibling; arc triples resolve to it.
    Vertex x = kNoVertex;
    for (const Triple& tr : triples) {
        if (tr.payload < 0)
            x = ~tr.payload;
        else
            out[static_cast<size_t>(tr.payload)] = x;
    }
    return out;
}

DerivedGraph compute_derived(const FlowGraph& g, const RootedTree& t) {
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<size_t>(g.arc_count()));
    for (ArcId a = 0; a < g.arc_count(); ++a) arcs.push_back(g.arc(a));

    DerivedGraph dg;
    dg.derived_tail = derived_tails(arcs, t);
    dg.inverse.assign(arcs.size(), kNoArc);
    for (size_t a = 0; a < arcs.size(); ++a) {
        if (dg.derived_tail[a] == kNoVertex) continue;
        dg.inverse[a] = static_cast<ArcId>(dg.arcs.size());
        dg.arcs.emplace_back(dg.derived_tail[a], arcs[a].second);
        dg.origin.push_back(static_cast<ArcId>(a));
    }
    return dg;
}

}  // namespace domcert
