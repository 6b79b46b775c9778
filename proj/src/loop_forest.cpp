#include "domcert/loop_forest.hpp"

#include <algorithm>

namespace domcert {

namespace {

struct Dsu {
    std::vector<Vertex> parent;
    std::vector<int> rank_;
    std::vector<Vertex> rep;  // representative vertex of each set root

    explicit Dsu(size_t n) : parent(n), rank_(n, 0), rep(n) {
        for (size_t v = 0; v < n; ++v) {
            parent[v] = static_cast<Vertex>(v);
            rep[v] = static_cast<Vertex>(v);
        }
    }
    Vertex find(Vertex v) {
        Vertex r = v;
        while (parent[static_cast<size_t>(r)] != r) r = parent[static_cast<size_t>(r)];
        while (parent[static_cast<size_t>(v)] != r) {
            Vertex next = parent[static_cast<size_t>(v)];
            parent[static_cast<size_t>(v)] = r;
            v = next;
        }
        return rep[static_cast<size_t>(r)];
    }
    // Merge keeping `into` as the visible representative.
    void absorb(Vertex into, Vertex member) {
        Vertex a = root_of(into), b = root_of(member);
        if (a == b) return;
        if (rank_[static_cast<size_t>(a)] < rank_[static_cast<size_t>(b)]) std::swap(a, b);
        parent[static_cast<size_t>(b)] = a;
        if (rank_[static_cast<size_t>(a)] == rank_[static_cast<size_t>(b)])
            ++rank_[static_cast<size_t>(a)];
        rep[static_cast<size_t>(a)] = into;
    }

private:
    Vertex root_of(Vertex v) {
        Vertex r = v;
        while (parent[static_cast<size_t>(r)] != r) r = parent[static_cast<size_t>(r)];
        while (parent[static_cast<size_t>(v)] != r) {
            Vertex next = parent[static_cast<size_t>(v)];
            parent[static_cast<size_t>(v)] = r;
            v = next;
        }
        return r;
    }
};

}  // namespace

LoopForest compute_loop_forest(const FlowGraph& g, const DfsInfo& d) {
    if (d.graph_stamp != g.stamp())
        throw MismatchedInputs("DfsInfo does not belong to this graph");
    const auto n = static_cast<size_t>(g.vertex_count());

    LoopForest lf;
    lf.dfs = d;
    lf.header.assign(n, kNoVertex);
    lf.out_target.assign(n, kNoVertex);
    lf.out_origin.assign(n, kNoArc);

    auto in_subtree = [&](Vertex u, Vertex v) { return d.is_ancestor_rpost(u, v); };

    // Per-component bags of unconsumed entering arcs, as intrusive lists over
    // arc ids. A bag belongs to the component's current representative.
    const auto m = static_cast<size_t>(g.arc_count());
    std::vector<ArcId> next_arc(m, kNoArc);
    std::vector<ArcId> bag_head(n, kNoArc), bag_tail(n, kNoArc);
    auto bag_push = [&](Vertex v, ArcId a) {
        next_arc[static_cast<size_t>(a)] = kNoArc;
        if (bag_head[static_cast<size_t>(v)] == kNoArc)
            bag_head[static_cast<size_t>(v)] = bag_tail[static_cast<size_t>(v)] = a;
        else {
            next_arc[static_cast<size_t>(bag_tail[static_cast<size_t>(v)])] = a;
            bag_tail[static_cast<size_t>(v)] = a;
        }
    };
    auto bag_splice = [&](Vertex into, Vertex from) {
        if (bag_head[static_cast<size_t>(from)] == kNoArc) return;
        if (bag_head[static_cast<size_t>(into)] == kNoArc) {
            bag_head[static_cast<size_t>(into)] = bag_head[static_cast<size_t>(from)];
            bag_tail[static_cast<size_t>(into)] = bag_tail[static_cast<size_t>(from)];
        } else {
            next_arc[static_cast<size_t>(bag_tail[static_cast<size_t>(into)])] =
                bag_head[static_cast<size_t>(from)];
            bag_tail[static_cast<size_t>(into)] = bag_tail[static_cast<size_t>(from)];
        }
        bag_head[static_cast<size_t>(from)] = bag_tail[static_cast<size_t>(from)] = kNoArc;
    };
    for (size_t v = 0; v < n; ++v)
        for (ArcId a : g.in_arcs(static_cast<Vertex>(v))) bag_push(static_cast<Vertex>(v), a);

    Dsu dsu(n);
    std::vector<char> in_loop(n, 0);
    std::vector<Vertex> worklist, members;

    for (size_t k = n; k-- > 0;) {
        Vertex u = d.by_rpost[k];
        worklist.clear();
        members.clear();

        // Drain u's bag: back arcs seed the loop, arcs from outside stay.
        ArcId a = bag_head[static_cast<size_t>(u)];
        bag_head[static_cast<size_t>(u)] = bag_tail[static_cast<size_t>(u)] = kNoArc;
        ArcId keep_head = kNoArc, keep_tail = kNoArc;
        while (a != kNoArc) {
            ArcId next = next_arc[static_cast<size_t>(a)];
            Vertex t = g.tail(a);
            if (t != u && in_subtree(u, t)) {
                Vertex x = dsu.find(t);
                if (x != u && !in_loop[static_cast<size_t>(x)]) {
                    in_loop[static_cast<size_t>(x)] = 1;
                    lf.out_target[static_cast<size_t>(x)] = u;
                    lf.out_origin[static_cast<size_t>(x)] = a;
                    worklist.push_back(x);
                    members.push_back(x);
                }
                // consumed either way: it is internal after contraction
            } else if (t != u) {
                if (keep_head == kNoArc)
                    keep_head = keep_tail = a;
                else {
                    next_arc[static_cast<size_t>(keep_tail)] = a;
                    keep_tail = a;
                }
                next_arc[static_cast<size_t>(a)] = kNoArc;
            }
            a = next;
        }
        bag_head[static_cast<size_t>(u)] = keep_head;
        bag_tail[static_cast<size_t>(u)] = keep_tail;

        // Backward traversal over component in-arcs.
        for (size_t w = 0; w < worklist.size(); ++w) {
            Vertex x = worklist[w];
            ArcId b = bag_head[static_cast<size_t>(x)];
            bag_head[static_cast<size_t>(x)] = bag_tail[static_cast<size_t>(x)] = kNoArc;
            while (b != kNoArc) {
                ArcId next = next_arc[static_cast<size_t>(b)];
                Vertex t = g.tail(b);
                Vertex y = dsu.find(t);
                if (y == u || in_loop[static_cast<size_t>(y)]) {
                    // internal after contraction; drop
                } else if (in_subtree(u, y)) {
                    in_loop[static_cast<size_t>(y)] = 1;
                    lf.out_target[static_cast<size_t>(y)] = x;
                    lf.out_origin[static_cast<size_t>(y)] = b;
                    worklist.push_back(y);
                    members.push_back(y);
                } else {
                    bag_push(u, b);  // enters the contracted u from outside
                }
                b = next;
            }
        }

        for (Vertex x : members) {
            lf.header[static_cast<size_t>(x)] = u;
            in_loop[static_cast<size_t>(x)] = 0;
            bag_splice(u, x);  // both bags are empty here; keeps invariants tidy
            dsu.absorb(u, x);
        }
    }
    return lf;
}

std::vector<std::pair<Vertex, std::vector<Vertex>>> intervals(const LoopForest& lf) {
    const auto n = lf.header.size();
    std::vector<std::vector<Vertex>> kids(n);
    // Increasing rpost keeps each child list in rpost order.
    for (size_t k = 0; k < n; ++k) {
        Vertex v = lf.dfs.by_rpost[k];
        if (lf.header[static_cast<size_t>(v)] != kNoVertex)
            kids[static_cast<size_t>(lf.header[static_cast<size_t>(v)])].push_back(v);
    }
    std::vector<std::pair<Vertex, std::vector<Vertex>>> out;
    for (size_t k = n; k-- > 0;) {
        Vertex u = lf.dfs.by_rpost[k];
        if (!kids[static_cast<size_t>(u)].empty())
            out.emplace_back(u, std::move(kids[static_cast<size_t>(u)]));
    }
    return out;
}

}  // namespace domcert
