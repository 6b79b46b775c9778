#include "domcert/dfs.hpp"

namespace domcert {

DfsInfo dfs(const FlowGraph& g) {
    const auto n = static_cast<size_t>(g.vertex_count());
    DfsInfo d;
    d.root = g.start();
    d.graph_stamp = g.stamp();
    d.parent.assign(n, kNoVertex);
    d.parent_arc.assign(n, kNoArc);
    d.pre.assign(n, 0);
    d.rpost.assign(n, 0);
    d.size.assign(n, 1);
    d.by_pre.reserve(n);
    d.by_rpost.assign(n, kNoVertex);

    // Explicit stack: (vertex, position in its out list).
    std::vector<std::pair<Vertex, size_t>> stack;
    stack.reserve(64);
    Vertex pre_counter = 0;
    Vertex rpost_counter = static_cast<Vertex>(n);

    d.pre[static_cast<size_t>(d.root)] = ++pre_counter;
    d.by_pre.push_back(d.root);
    stack.emplace_back(d.root, 0);
    while (!stack.empty()) {
        auto& [v, i] = stack.back();
        auto arcs = g.out_arcs(v);
        if (i < arcs.size()) {
            ArcId a = arcs[i++];
            Vertex w = g.head(a);
            if (d.pre[static_cast<size_t>(w)] == 0) {
                d.parent[static_cast<size_t>(w)] = v;
                d.parent_arc[static_cast<size_t>(w)] = a;
                d.pre[static_cast<size_t>(w)] = ++pre_counter;
                d.by_pre.push_back(w);
                stack.emplace_back(w, 0);
            }
        } else {
            Vertex done = v;
            d.rpost[static_cast<size_t>(done)] = rpost_counter--;
            d.by_rpost[static_cast<size_t>(d.rpost[static_cast<size_t>(done)] - 1)] = done;
            stack.pop_back();
            if (!stack.empty())
                d.size[static_cast<size_t>(stack.back().first)] +=
                    d.size[static_cast<size_t>(done)];
        }
    }
    // Every vertex is reachable by FlowGraph construction.
    return d;
}

}  // namespace domcert
