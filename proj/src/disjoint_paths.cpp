#include "domcert/disjoint_paths.hpp"

#include <algorithm>

#include "domcert/loop_forest.hpp"
#include "domcert/lowhigh.hpp"
#include "domcert/semidom.hpp"
#include "domcert/trees.hpp"

namespace domcert {

DisjointPathIndex DisjointPathIndex::build(Vertex n, std::span<const Arc> arcs, Vertex s1,
                                           Vertex s2) {
    if (s1 < 0 || s1 >= n) throw InvalidVertex(s1);
    if (s2 < 0 || s2 >= n) throw InvalidVertex(s2);

    std::vector<Arc> augmented(arcs.begin(), arcs.end());
    const Vertex root = n;
    augmented.emplace_back(root, s1);
    augmented.emplace_back(root, s2);
    FlowGraph g = FlowGraph::build(n + 1, root, augmented);

    auto [dom, info] = compute_dominator_tree(g);
    LoopForest lf = compute_loop_forest(g, info.dfs);
    LowHighOrder lh = lowhigh_from_loops(g, dom, lf);
    TreePair pair = build_strongly_independent(g, dom, lh);

    DisjointPathIndex idx;
    idx.n_base_ = n;
    idx.root_ = root;
    idx.s1_ = s1;
    idx.s2_ = s2;
    idx.b_ = std::move(pair.b);
    idx.r_ = std::move(pair.r);
    idx.lh_rank_ = std::move(lh.rank);
    idx.c_.assign(static_cast<size_t>(n) + 1, kNoVertex);
    idx.c_[static_cast<size_t>(root)] = root;
    // Children of the root inherit themselves; everything else its parent's entry.
    for (Vertex k = 1; k <= n; ++k) {
        Vertex v = dom.by_rank[static_cast<size_t>(k)];
        Vertex p = dom.parent[static_cast<size_t>(v)];
        idx.c_[static_cast<size_t>(v)] = (p == root) ? v : idx.c_[static_cast<size_t>(p)];
    }
    return idx;
}

Vertex DisjointPathIndex::entry(Vertex v) const {
    check(v);
    return c_[static_cast<size_t>(v)];
}

bool DisjointPathIndex::query_exists(Vertex u, Vertex v) const {
    check(u);
    check(v);
    if (u == v) return c_[static_cast<size_t>(u)] == u;
    return c_[static_cast<size_t>(u)] != c_[static_cast<size_t>(v)];
}

std::vector<Vertex> DisjointPathIndex::walk(const std::vector<Vertex>& parent, Vertex v) const {
    std::vector<Vertex> path;
    for (Vertex x = v; x != root_; x = parent[static_cast<size_t>(x)]) path.push_back(x);
    std::reverse(path.begin(), path.end());  // starts at s1 or s2
    return path;
}

std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> DisjointPathIndex::query_paths(
    Vertex u, Vertex v) const {
    if (!query_exists(u, v)) return std::nullopt;
    // The low-high order says which assignment shares only common dominators:
    // B serves the smaller endpoint, R the larger.
    std::vector<Vertex> p1, p2;
    if (u == v) {
        p1 = walk(b_, u);
        p2 = walk(r_, u);
    } else if (lh_rank_[static_cast<size_t>(u)] < lh_rank_[static_cast<size_t>(v)]) {
        p1 = walk(b_, u);
        p2 = walk(r_, v);
    } else {
        p1 = walk(r_, u);
        p2 = walk(b_, v);
    }
    if (p1.front() != s1_) p1.swap(p2);
    return std::make_pair(std::move(p1), std::move(p2));
}

}  // namespace domcert
