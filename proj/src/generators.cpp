#include "domcert/generators.hpp"

#include <algorithm>

#include "domcert/semidom.hpp"

namespace domcert {

namespace {

GraphData random_flow(Vertex n, ArcId m, std::uint64_t seed) {
    if (n < 2) throw InfeasibleSpec("random-flow needs n >= 2");
    if (m < n - 1) throw InfeasibleSpec("random-flow needs m >= n-1");
    SplitMix64 rng(seed);
    GraphData g{n, 0, {}};
    g.arcs.reserve(static_cast<size_t>(m));
    // Random arborescence from s: attach each vertex (in random order) to a
    // random vertex already attached.
    std::vector<Vertex> order(static_cast<size_t>(n) - 1);
    for (Vertex v = 1; v < n; ++v) order[static_cast<size_t>(v - 1)] = v;
    for (size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[static_cast<size_t>(rng.below(i))]);
    std::vector<Vertex> attached{0};
    for (Vertex v : order) {
        Vertex p = attached[static_cast<size_t>(rng.below(attached.size()))];
        g.arcs.emplace_back(p, v);
        attached.push_back(v);
    }
    for (ArcId a = n - 1; a < m; ++a) {
        Vertex u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        Vertex v = 1 + static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n - 1)));
        g.arcs.emplace_back(u, v);  // heads avoid s so m is kept exactly
    }
    return g;
}

GraphData random_dag(Vertex n, ArcId m, std::uint64_t seed) {
    if (n < 2) throw InfeasibleSpec("random-dag needs n >= 2");
    if (m < n - 1) throw InfeasibleSpec("random-dag needs m >= n-1");
    SplitMix64 rng(seed);
    GraphData g{n, 0, {}};
    // Random topological position per vertex; s first.
    std::vector<Vertex> perm(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v) perm[static_cast<size_t>(v)] = v;
    for (size_t i = perm.size(); i > 2; --i)
        std::swap(perm[i - 1], perm[1 + static_cast<size_t>(rng.below(i - 1))]);
    for (size_t k = 1; k < perm.size(); ++k) {
        Vertex p = perm[static_cast<size_t>(rng.below(k))];
        g.arcs.emplace_back(p, perm[k]);
    }
    for (ArcId a = n - 1; a < m; ++a) {
        size_t j = 1 + static_cast<size_t>(rng.below(static_cast<std::uint64_t>(n - 1)));
        size_t i = static_cast<size_t>(rng.below(static_cast<std::uint64_t>(j)));
        g.arcs.emplace_back(perm[i], perm[j]);
    }
    return g;
}

GraphData reducible(Vertex n, ArcId m, std::uint64_t seed) {
    if (n < 2) throw InfeasibleSpec("reducible needs n >= 2");
    if (m < n - 1) throw InfeasibleSpec("reducible needs m >= n-1");
    SplitMix64 rng(seed);
    ArcId forward = std::max<ArcId>(n - 1, (m * 3) / 4);
    GraphData g = random_dag(n, std::min(m, forward), rng.next());
    // Back arcs aim at dominators of their tails, so deleting them restores
    // the DAG skeleton: nested natural loops only.
    auto [dom, info] = compute_dominator_tree(FlowGraph::build(g.n, g.s, g.arcs));
    for (ArcId a = static_cast<ArcId>(g.arcs.size()); a < m; ++a) {
        Vertex v = 1 + static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n - 1)));
        std::vector<Vertex> doms;  // v's strict and non-strict dominators except s
        for (Vertex x = v; x != kNoVertex; x = dom.parent[static_cast<size_t>(x)])
            if (x != g.s) doms.push_back(x);
        g.arcs.emplace_back(v, doms[static_cast<size_t>(rng.below(doms.size()))]);
    }
    return g;
}

GraphData ladder(Vertex n, std::uint64_t seed) {
    // Chain of diamonds: head -> two branches -> next head, plus a back arc
    // into the previous head every other rung. n is rounded up to 3k+1.
    Vertex k = std::max<Vertex>(1, (n - 1 + 2) / 3);
    GraphData g{3 * k + 1, 0, {}};
    SplitMix64 rng(seed);
    Vertex head = 0;
    for (Vertex i = 0; i < k; ++i) {
        Vertex x = 3 * i + 1, y = 3 * i + 2, next = 3 * i + 3;
        g.arcs.emplace_back(head, x);
        g.arcs.emplace_back(head, y);
        g.arcs.emplace_back(x, next);
        g.arcs.emplace_back(y, next);
        if (head != 0 && rng.below(2) == 0) g.arcs.emplace_back(next, head);
        head = next;
    }
    return g;
}

GraphData complete(Vertex n) {
    if (n < 2) throw InfeasibleSpec("complete needs n >= 2");
    GraphData g{n, 0, {}};
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 1; v < n; ++v)
            if (u != v) g.arcs.emplace_back(u, v);
    return g;
}

GraphData figure(std::initializer_list<Arc> arcs, Vertex n) {
    GraphData g{n, 0, {}};
    g.arcs.assign(arcs.begin(), arcs.end());
    return g;
}

}  // namespace

GraphData generate_data(const GenSpec& spec) {
    switch (spec.family) {
        case Family::kRandomFlow:
            return random_flow(spec.n, spec.m, spec.seed);
        case Family::kRandomDag:
            return random_dag(spec.n, spec.m, spec.seed);
        case Family::kReducible:
            return reducible(spec.n, spec.m, spec.seed);
        case Family::kLadder:
            return ladder(spec.n, spec.seed);
        case Family::kComplete:
            return complete(spec.n);
        case Family::kFig1:
            return figure({{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}, {3, 6}, {6, 7}, {7, 3}}, 8);
        case Family::kFig2:
            return figure({{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {1, 4}}, 5);
        case Family::kFig6:
            return figure({{0, 2}, {0, 1}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {5, 6}, {6, 7}, {1, 3}, {1, 7}}, 8);
        case Family::kFig7:
            return figure({{0, 1}, {1, 2}, {1, 4}, {1, 6}, {2, 3}, {3, 4}, {3, 2}, {4, 5}, {4, 3},
                           {5, 7}, {5, 6}, {5, 1}, {7, 8}, {8, 9}, {9, 10}, {9, 5}, {10, 7}, {6, 8}},
                          11);
        case Family::kFig10:
            return figure({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {2, 6}, {6, 7}, {7, 3}, {7, 4}, {0, 6}, {1, 7}},
                          8);
        case Family::kFig12:
            return figure({{0, 1}, {1, 2}, {0, 2}, {2, 3}, {1, 3}, {1, 4}, {3, 4}, {4, 5}, {4, 6}, {5, 6}},
                          7);
        case Family::kFig14:
            // placeholder until the search pins the graph
            return figure({{0, 1}}, 2);
    }
    throw InfeasibleSpec("unknown family");
}

FlowGraph generate(const GenSpec& spec) {
    GraphData d = generate_data(spec);
    return FlowGraph::build(d.n, d.s, d.arcs);
}

Family parse_family(const std::string& name) {
    if (name == "random-flow") return Family::kRandomFlow;
    if (name == "random-dag") return Family::kRandomDag;
    if (name == "reducible") return Family::kReducible;
    if (name == "ladder") return Family::kLadder;
    if (name == "complete") return Family::kComplete;
    if (name == "fig1") return Family::kFig1;
    if (name == "fig2") return Family::kFig2;
    if (name == "fig6") return Family::kFig6;
    if (name == "fig7") return Family::kFig7;
    if (name == "fig10") return Family::kFig10;
    if (name == "fig12") return Family::kFig12;
    if (name == "fig14") return Family::kFig14;
    throw InfeasibleSpec("unknown family: " + name);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::kRandomFlow: return "random-flow";
        case Family::kRandomDag: return "random-dag";
        case Family::kReducible: return "reducible";
        case Family::kLadder: return "ladder";
        case Family::kComplete: return "complete";
        case Family::kFig1: return "fig1";
        case Family::kFig2: return "fig2";
        case Family::kFig6: return "fig6";
        case Family::kFig7: return "fig7";
        case Family::kFig10: return "fig10";
        case Family::kFig12: return "fig12";
        case Family::kFig14: return "fig14";
    }
    return "?";
}

}  // namespace domcert
