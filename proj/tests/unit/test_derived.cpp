#include <doctest.h>

#include "domcert/brute.hpp"
#include "domcert/derived.hpp"
#include "domcert/lowhigh.hpp"
#include "domcert/semidom.hpp"
#include "helpers.hpp"

using namespace domcert;
using test::make;

namespace {

// Derived tail by definition: parent-chase from the arc tail to the sibling
// of the head.
Vertex naive_derived_tail(const RootedTree& t, Vertex v, Vertex w) {
    if (t.is_ancestor(w, v)) return kNoVertex;
    if (v == t.parent[static_cast<size_t>(w)]) return v;
    Vertex x = v;
    while (t.parent[static_cast<size_t>(x)] != t.parent[static_cast<size_t>(w)])
        x = t.parent[static_cast<size_t>(x)];
    return x;
}

}  // namespace

TEST_CASE("tree arcs map to themselves, ancestor arcs to null") {
    FlowGraph g = test::fixture("fig1.graph");
    DomTree d = oracle_dominators(g);
    DerivedGraph dg = compute_derived(g, d);
    // (6,7) is a tree arc of D
    CHECK(dg.derived_tail[8] == 6);
    // (7,3): 3 is an ancestor of 7 in D
    CHECK(dg.derived_tail[9] == kNoVertex);
    CHECK(dg.inverse[9] == kNoArc);
}

TEST_CASE("fig1's full derived graph") {
    FlowGraph g = test::fixture("fig1.graph");
    DomTree d = oracle_dominators(g);
    DerivedGraph dg = compute_derived(g, d);
    CHECK(dg.derived_tail ==
          std::vector<Vertex>{0, 0, 1, 2, 2, 3, 2, 3, 6, kNoVertex});
    CHECK(dg.arcs.size() == 9);
    CHECK(dg.origin.size() == 9);
    for (size_t i = 0; i < dg.arcs.size(); ++i) {
        CHECK(dg.arcs[i].second == g.head(dg.origin[i]));
        CHECK(dg.inverse[static_cast<size_t>(dg.origin[i])] == static_cast<ArcId>(i));
    }
}

TEST_CASE("derived tails agree with parent chasing on random graphs") {
    for (const FlowGraph& g : test::corpus(40, 80, 41)) {
        auto [d, info] = compute_dominator_tree(g);
        DerivedGraph dg = compute_derived(g, d);
        for (ArcId a = 0; a < g.arc_count(); ++a)
            CHECK(dg.derived_tail[static_cast<size_t>(a)] ==
                  naive_derived_tail(d, g.tail(a), g.head(a)));
    }
}

TEST_CASE("every derived arc leads to a child or sibling") {
    for (const FlowGraph& g : test::corpus(20, 60, 43)) {
        auto [d, info] = compute_dominator_tree(g);
        DerivedGraph dg = compute_derived(g, d);
        for (const auto& [tail, head] : dg.arcs) {
            Vertex pt = d.parent[static_cast<size_t>(tail)];
            Vertex ph = d.parent[static_cast<size_t>(head)];
            CHECK((ph == tail || ph == pt));
        }
    }
}

TEST_CASE("the derived graph is a flow graph and preserves acyclicity") {
    for (int i = 0; i < 15; ++i) {
        FlowGraph g = generate(GenSpec{Family::kRandomDag, 40, 120, 1000u + static_cast<unsigned>(i)});
        auto [d, info] = compute_dominator_tree(g);
        DerivedGraph dg = compute_derived(g, d);
        // reachability from s over derived arcs
        std::vector<std::vector<Vertex>> adj(static_cast<size_t>(g.vertex_count()));
        for (const auto& [t, h] : dg.arcs) adj[static_cast<size_t>(t)].push_back(h);
        std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
        std::vector<Vertex> stack{g.start()};
        seen[static_cast<size_t>(g.start())] = 1;
        size_t reached = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : adj[static_cast<size_t>(v)])
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        CHECK(reached == static_cast<size_t>(g.vertex_count()));
        // acyclic input -> acyclic derived graph (Kahn)
        std::vector<int> indeg(static_cast<size_t>(g.vertex_count()), 0);
        for (const auto& [t, h] : dg.arcs) ++indeg[static_cast<size_t>(h)];
        std::vector<Vertex> q;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (indeg[static_cast<size_t>(v)] == 0) q.push_back(v);
        size_t removed = 0;
        while (!q.empty()) {
            Vertex v = q.back();
            q.pop_back();
            ++removed;
            for (Vertex w : adj[static_cast<size_t>(v)])
                if (--indeg[static_cast<size_t>(w)] == 0) q.push_back(w);
        }
        CHECK(removed == static_cast<size_t>(g.vertex_count()));
    }
}

TEST_CASE("a preorder is low-high on the graph iff on its derived graph") {
    for (const FlowGraph& g : test::corpus(20, 40, 47)) {
        auto [d, info] = compute_dominator_tree(g);
        LoopForest lf = compute_loop_forest(g, info.dfs);
        LowHighOrder lh = lowhigh_from_loops(g, d, lf);
        DerivedGraph dg = compute_derived(g, d);
        std::vector<Arc> darcs = dg.arcs;
        FlowGraph gp = FlowGraph::build(g.vertex_count(), g.start(), darcs);
        CHECK(oracle_is_low_high(g, d, lh.rank));
        CHECK(oracle_is_low_high(gp, d, lh.rank));
        // and a broken order stays broken on both
        if (g.vertex_count() >= 3) {
            std::vector<Vertex> bad = lh.rank;
            Vertex a = d.by_rank[1], b = d.by_rank[g.vertex_count() - 1];
            std::swap(bad[static_cast<size_t>(a)], bad[static_cast<size_t>(b)]);
            CHECK(oracle_is_low_high(g, d, bad) == oracle_is_low_high(gp, d, bad));
        }
    }
}

TEST_CASE("parent property violations are reported with the arc") {
    FlowGraph g = test::chain3();
    // flat tree has the parent property on a chain; a child-swapped tree no
    RootedTree flat = tree_from_parents(0, std::vector<Vertex>{kNoVertex, 0, 0});
    CHECK_NOTHROW(compute_derived(g, flat));
    RootedTree wrong = tree_from_parents(0, std::vector<Vertex>{kNoVertex, 2, 0});
    CHECK_THROWS_AS(compute_derived(g, wrong), ParentPropertyError);
}
