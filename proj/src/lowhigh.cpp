#include "domcert/lowhigh.hpp"

#include <algorithm>

#include "domcert/offline_list.hpp"

namespace domcert {

namespace {

// One sibling-list insertion, in processing order. anchor == kNoVertex means
// "insert first"; otherwise v goes just after `anchor` when `other` is not
// the parent and currently follows it, just before it otherwise.
struct InsertOp {
    Vertex v;
    Vertex anchor = kNoVertex;
    Vertex other = kNoVertex;
    bool other_is_parent = false;
};

LowHighOrder assemble_order(const DomTree& d, const std::vector<InsertOp>& ops) {
    const auto n = static_cast<size_t>(d.n());
    std::vector<int> local(n, -1);
    std::vector<ListScript> scripts(n);
    std::vector<std::vector<Vertex>> items(n);

    for (const InsertOp& op : ops) {
        Vertex p = d.parent[static_cast<size_t>(op.v)];
        local[static_cast<size_t>(op.v)] = static_cast<int>(items[static_cast<size_t>(p)].size());
        items[static_cast<size_t>(p)].push_back(op.v);
        auto& script = scripts[static_cast<size_t>(p)];
        if (op.anchor == kNoVertex) {
            script.ops.push_back(ListOp::insert(local[static_cast<size_t>(op.v)]));
            continue;
        }
        if (d.parent[static_cast<size_t>(op.anchor)] != p ||
            local[static_cast<size_t>(op.anchor)] < 0)
            throw MismatchedInputs("insertion anchor is not an ordered sibling");
        int anchor_l = local[static_cast<size_t>(op.anchor)];
        if (op.other_is_parent) {
            script.ops.push_back(ListOp::insert_rel(local[static_cast<size_t>(op.v)], anchor_l,
                                                    [](const AfterQuery&) { return false; }));
        } else {
            if (op.other < 0 || d.parent[static_cast<size_t>(op.other)] != p ||
                local[static_cast<size_t>(op.other)] < 0)
                throw MismatchedInputs("insertion witness is not an ordered sibling");
            int other_l = local[static_cast<size_t>(op.other)];
            script.ops.push_back(ListOp::insert_rel(
                local[static_cast<size_t>(op.v)], anchor_l,
                [other_l, anchor_l](const AfterQuery& after) { return after(other_l, anchor_l); }));
        }
    }

    LowHighOrder lh;
    lh.children.assign(n, {});
    for (size_t p = 0; p < n; ++p) {
        if (items[p].empty()) continue;
        scripts[p].items = static_cast<int>(items[p].size());
        ListResult res = run_script(scripts[p]);
        lh.children[p].assign(items[p].size(), kNoVertex);
        for (size_t i = 0; i < items[p].size(); ++i)
            lh.children[p][static_cast<size_t>(res.rank[i]) - 1] = items[p][i];
    }

    // Preorder of D visiting children in list order.
    lh.rank.assign(n, 0);
    std::vector<std::pair<Vertex, size_t>> stack;
    Vertex counter = 0;
    lh.rank[static_cast<size_t>(d.root)] = ++counter;
    stack.emplace_back(d.root, 0);
    while (!stack.empty()) {
        auto& [v, i] = stack.back();
        const auto& kids = lh.children[static_cast<size_t>(v)];
        if (i < kids.size()) {
            Vertex w = kids[i++];
            lh.rank[static_cast<size_t>(w)] = ++counter;
            stack.emplace_back(w, 0);
        } else {
            stack.pop_back();
        }
    }
    return lh;
}

}  // namespace

bool is_reducible(const FlowGraph& g, const DomTree& d) {
    const auto n = static_cast<size_t>(g.vertex_count());
    // DFS over the residual graph (dominator-back arcs removed); a retreating
    // arc into an open vertex is a cycle.
    std::vector<char> state(n, 0);  // 0 new, 1 open, 2 done
    std::vector<std::pair<Vertex, size_t>> stack;
    stack.emplace_back(g.start(), 0);
    state[static_cast<size_t>(g.start())] = 1;
    while (!stack.empty()) {
        auto& [v, i] = stack.back();
        auto arcs = g.out_arcs(v);
        bool descended = false;
        while (i < arcs.size()) {
            ArcId a = arcs[i++];
            Vertex w = g.head(a);
            if (d.is_ancestor(w, v)) continue;  // deleted dominator-back arc
            if (state[static_cast<size_t>(w)] == 1) return false;
            if (state[static_cast<size_t>(w)] == 0) {
                state[static_cast<size_t>(w)] = 1;
                stack.emplace_back(w, 0);
                descended = true;
                break;
            }
        }
        if (!descended && i >= arcs.size()) {
            state[static_cast<size_t>(v)] = 2;
            stack.pop_back();
        }
    }
    return true;
}

LowHighOrder lowhigh_reducible(const FlowGraph& g, const DomTree& d) {
    const auto n = static_cast<size_t>(g.vertex_count());
    DerivedGraph dg = compute_derived(g, d);  // nulls are exactly the deleted arcs

    // Reverse postorder of the residual DAG is a topological order.
    std::vector<Vertex> order(n, 0);
    std::vector<Vertex> by_order(n, kNoVertex);
    {
        std::vector<char> seen(n, 0);
        std::vector<std::pair<Vertex, size_t>> stack;
        Vertex counter = static_cast<Vertex>(n);
        stack.emplace_back(g.start(), 0);
        seen[static_cast<size_t>(g.start())] = 1;
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            auto arcs = g.out_arcs(v);
            bool descended = false;
            while (i < arcs.size()) {
                ArcId a = arcs[i++];
                if (dg.derived_tail[static_cast<size_t>(a)] == kNoVertex) continue;
                Vertex w = g.head(a);
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    stack.emplace_back(w, 0);
                    descended = true;
                    break;
                }
            }
            if (!descended && i >= arcs.size()) {
                order[static_cast<size_t>(v)] = counter--;
                stack.pop_back();
            }
        }
        if (counter != 0) throw NotReducible();  // residual must span the graph
        for (size_t v = 0; v < n; ++v) by_order[static_cast<size_t>(order[v]) - 1] = static_cast<Vertex>(v);
    }
    for (ArcId a = 0; a < g.arc_count(); ++a) {
        if (dg.derived_tail[static_cast<size_t>(a)] == kNoVertex) continue;
        if (order[static_cast<size_t>(g.tail(a))] >= order[static_cast<size_t>(g.head(a))])
            throw NotReducible();
    }

    std::vector<InsertOp> ops;
    ops.reserve(n - 1);
    for (size_t k = 1; k < n; ++k) {
        Vertex v = by_order[k];
        Vertex dv = d.parent[static_cast<size_t>(v)];
        bool tree_arc = false;
        Vertex first = kNoVertex, second = kNoVertex;
        for (ArcId a : g.in_arcs(v)) {
            if (g.tail(a) == dv) tree_arc = true;
            Vertex t = dg.derived_tail[static_cast<size_t>(a)];
            if (t == kNoVertex) continue;
            if (first == kNoVertex)
                first = t;
            else if (second == kNoVertex && t != first)
                second = t;
        }
        if (tree_arc)
            ops.push_back({v, kNoVertex, kNoVertex, false});
        else if (second != kNoVertex)
            ops.push_back({v, first, second, false});
        else
            throw MissingWitnessArcs(v);
    }
    return assemble_order(d, ops);
}

LowHighOrder lowhigh_from_loops(const FlowGraph& g, const DomTree& d,
                                const LoopForest& lf, LoopOrderTrace* trace) {
    if (lf.dfs.graph_stamp != g.stamp())
        throw MismatchedInputs("LoopForest does not belong to this graph");
    const auto n = static_cast<size_t>(g.vertex_count());
    const DfsInfo& fd = lf.dfs;
    DerivedGraph dg = compute_derived(g, d);

    // Two best entering derived arcs per loop subtree, distinct derived
    // tails, minimal original tail: arcs start at their head's node and merge
    // bottom-up, dying once the tail is no longer outside the loop.
    struct Cand {
        Vertex y = kNoVertex;  // original tail, as rpost number
        ArcId arc = kNoArc;
        Vertex dtail = kNoVertex;
        bool ok() const { return arc != kNoArc; }
        bool operator<(const Cand& o) const { return y < o.y || (y == o.y && arc < o.arc); }
    };
    struct Best2 {
        Cand a1, a2;
        void offer(Cand c) {
            if (!a1.ok()) {
                a1 = c;
            } else if (c.dtail == a1.dtail) {
                if (c < a1) a1 = c;
            } else if (c < a1) {
                a2 = a1;  // previous minimum; tails differ
                a1 = c;
            } else if (!a2.ok() || c < a2) {
                a2 = c;
            }
        }
    };
    std::vector<Best2> cands(n);
    for (size_t k = n; k-- > 1;) {
        Vertex u = fd.by_rpost[k];
        Vertex u_r = fd.rpost[static_cast<size_t>(u)];
        for (ArcId a : g.in_arcs(u)) {
            Vertex y_r = fd.rpost[static_cast<size_t>(g.tail(a))];
            if (y_r < u_r && dg.derived_tail[static_cast<size_t>(a)] != kNoVertex)
                cands[static_cast<size_t>(u)].offer(
                    {y_r, a, dg.derived_tail[static_cast<size_t>(a)]});
        }
        Vertex h = lf.header[static_cast<size_t>(u)];
        if (h == kNoVertex) continue;
        Vertex h_r = fd.rpost[static_cast<size_t>(h)];
        for (const Cand& c : {cands[static_cast<size_t>(u)].a1, cands[static_cast<size_t>(u)].a2})
            if (c.ok() && c.y < h_r) cands[static_cast<size_t>(h)].offer(c);
    }

    std::vector<ArcId> pivot(n, kNoArc);
    std::vector<InsertOp> ops;
    ops.reserve(n - 1);
    for (size_t k = 1; k < n; ++k) {
        Vertex u = fd.by_rpost[k];
        Vertex du = d.parent[static_cast<size_t>(u)];
        ArcId f_arc = fd.parent_arc[static_cast<size_t>(u)];
        Vertex f_tail = dg.derived_tail[static_cast<size_t>(f_arc)];  // f'(u), never null

        ArcId piv = pivot[static_cast<size_t>(u)];
        bool had_pivot = piv != kNoArc;
        if (!had_pivot) piv = f_arc;
        Vertex piv_tail = dg.derived_tail[static_cast<size_t>(piv)];
        Vertex piv_head = g.head(piv);

        LoopOrderStep step;
        if (trace) {
            step.vertex = u;
            step.had_pivot = had_pivot;
            step.pivot = {piv_tail, piv_head};
        }

        if (piv_tail == du && piv_head == u) {
            ops.push_back({u, kNoVertex, kNoVertex, false});
            if (trace) trace->push_back(std::move(step));
            continue;
        }

        ArcId test;
        if (!(piv_tail == f_tail && piv_head == u)) {
            test = f_arc;
        } else {
            const Best2& c = cands[static_cast<size_t>(u)];
            if (c.a1.ok() && c.a1.dtail != f_tail)
                test = c.a1.arc;
            else if (c.a2.ok() && c.a2.dtail != f_tail)
                test = c.a2.arc;
            else
                throw MissingTestArc(u);
        }
        Vertex test_tail = dg.derived_tail[static_cast<size_t>(test)];
        if (trace) step.test = {test_tail, g.head(test)};

        if (piv_tail == du)
            ops.push_back({u, kNoVertex, kNoVertex, false});
        else
            ops.push_back({u, piv_tail, test_tail, test_tail == du});

        // Walk the interval path with the arc that is not (f'(u), u). When a
        // preassigned pivot coincides with (f'(u), u), walking the test arc
        // could seed the loop with an arc from outside the enclosing chain
        // and break the straddle of an outer header, so the members are left
        // to anchor at their own tree arcs instead.
        if (had_pivot && piv_tail == f_tail && piv_head == u) {
            if (trace) trace->push_back(std::move(step));
            continue;
        }
        ArcId walk = (piv_tail == f_tail && piv_head == u) ? test : piv;
        Vertex v = g.head(walk);
        if (v != u) {
            Vertex z = v;
            while (z != kNoVertex && lf.header[static_cast<size_t>(z)] != u)
                z = lf.header[static_cast<size_t>(z)];
            if (z == kNoVertex) throw MissingTestArc(u);
            pivot[static_cast<size_t>(z)] = walk;
            if (trace) step.interval_path.push_back(z);
            Vertex x = z;
            while (x != u) {
                ArcId orig = lf.out_origin[static_cast<size_t>(x)];
                Vertex nxt = lf.out_target[static_cast<size_t>(x)];
                if (orig == kNoArc) throw MissingTestArc(u);
                if (nxt != u) {
                    if (dg.derived_tail[static_cast<size_t>(orig)] == kNoVertex)
                        throw MissingTestArc(u);
                    pivot[static_cast<size_t>(nxt)] = orig;
                }
                if (trace) step.interval_path.push_back(nxt);
                x = nxt;
            }
        }
        if (trace) trace->push_back(std::move(step));
    }
    return assemble_order(d, ops);
}

LowHighOrder lowhigh_from_trees(const FlowGraph& g, const DomTree& d, const TreePair& pair) {
    const auto n = static_cast<size_t>(g.vertex_count());
    if (pair.b.size() != n || pair.r.size() != n)
        throw MismatchedInputs("tree pair does not match the graph");
    const Vertex s = g.start();

    // Step 1: prefer the arc from the immediate dominator where it exists.
    std::vector<char> tree_arc(n, 0);
    for (ArcId a = 0; a < g.arc_count(); ++a) {
        Vertex h = g.head(a);
        if (h != s && g.tail(a) == d.parent[static_cast<size_t>(h)])
            tree_arc[static_cast<size_t>(h)] = 1;
    }
    std::vector<Vertex> b(pair.b), r(pair.r);
    for (size_t v = 0; v < n; ++v) {
        if (static_cast<Vertex>(v) == s) continue;
        bool b_ok = false, r_ok = false;
        for (ArcId a : g.in_arcs(static_cast<Vertex>(v))) {
            b_ok = b_ok || g.tail(a) == b[v];
            r_ok = r_ok || g.tail(a) == r[v];
        }
        if (!b_ok || !r_ok)
            throw MismatchedInputs("tree pair uses arcs not present in the graph");
        if (tree_arc[v]) b[v] = r[v] = d.parent[v];
    }

    // Step 2: derived arcs of the 2(n-1) tree arcs.
    std::vector<Arc> arcs;
    arcs.reserve(2 * (n - 1));
    for (size_t v = 0; v < n; ++v) {
        if (static_cast<Vertex>(v) == s) continue;
        arcs.emplace_back(b[v], static_cast<Vertex>(v));
        arcs.emplace_back(r[v], static_cast<Vertex>(v));
    }
    std::vector<Vertex> dt = derived_tails(arcs, d);
    std::vector<Vertex> b2(n, kNoVertex), r2(n, kNoVertex);
    {
        size_t i = 0;
        for (size_t v = 0; v < n; ++v) {
            if (static_cast<Vertex>(v) == s) continue;
            b2[v] = dt[i++];
            r2[v] = dt[i++];
            if (b2[v] == kNoVertex || r2[v] == kNoVertex) throw NoPeelableVertex();
        }
    }

    // Step 4: peel vertices with spare in-degree. Children lists are
    // intrusive so the single-child lookup and splice are O(1).
    auto make_links = [&](const std::vector<Vertex>& par, std::vector<Vertex>& head,
                          std::vector<Vertex>& prev, std::vector<Vertex>& next,
                          std::vector<Vertex>& cnt) {
        head.assign(n, kNoVertex);
        prev.assign(n, kNoVertex);
        next.assign(n, kNoVertex);
        cnt.assign(n, 0);
        for (size_t v = 0; v < n; ++v) {
            if (static_cast<Vertex>(v) == s) continue;
            Vertex p = par[v];
            next[v] = head[static_cast<size_t>(p)];
            if (head[static_cast<size_t>(p)] != kNoVertex)
                prev[static_cast<size_t>(head[static_cast<size_t>(p)])] = static_cast<Vertex>(v);
            head[static_cast<size_t>(p)] = static_cast<Vertex>(v);
            ++cnt[static_cast<size_t>(p)];
        }
    };
    auto unlink = [&](std::vector<Vertex>& head, std::vector<Vertex>& prev,
                      std::vector<Vertex>& next, std::vector<Vertex>& cnt, Vertex p, Vertex v) {
        if (prev[static_cast<size_t>(v)] != kNoVertex)
            next[static_cast<size_t>(prev[static_cast<size_t>(v)])] = next[static_cast<size_t>(v)];
        else
            head[static_cast<size_t>(p)] = next[static_cast<size_t>(v)];
        if (next[static_cast<size_t>(v)] != kNoVertex)
            prev[static_cast<size_t>(next[static_cast<size_t>(v)])] = prev[static_cast<size_t>(v)];
        prev[static_cast<size_t>(v)] = next[static_cast<size_t>(v)] = kNoVertex;
        --cnt[static_cast<size_t>(p)];
    };
    auto link = [&](std::vector<Vertex>& head, std::vector<Vertex>& prev,
                    std::vector<Vertex>& next, std::vector<Vertex>& cnt, Vertex p, Vertex v) {
        next[static_cast<size_t>(v)] = head[static_cast<size_t>(p)];
        prev[static_cast<size_t>(v)] = kNoVertex;
        if (head[static_cast<size_t>(p)] != kNoVertex)
            prev[static_cast<size_t>(head[static_cast<size_t>(p)])] = v;
        head[static_cast<size_t>(p)] = v;
        ++cnt[static_cast<size_t>(p)];
    };

    std::vector<Vertex> bhead, bprev, bnext, bcnt, rhead, rprev, rnext, rcnt;
    make_links(b2, bhead, bprev, bnext, bcnt);
    make_links(r2, rhead, rprev, rnext, rcnt);

    auto indeg = [&](size_t v) { return b2[v] == r2[v] ? 1 : 2; };
    auto candidate = [&](size_t v) {
        return indeg(v) > bcnt[v] + rcnt[v];
    };

    std::vector<char> peeled(n, 0), queued(n, 0);
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (size_t v = 0; v < n; ++v)
        if (static_cast<Vertex>(v) != s && candidate(v)) {
            queue.push_back(static_cast<Vertex>(v));
            queued[v] = 1;
        }

    struct Peel {
        Vertex v, b, r;
    };
    std::vector<Peel> peels;
    peels.reserve(n - 1);
    size_t qi = 0;
    auto push = [&](Vertex v) {
        if (v == s || peeled[static_cast<size_t>(v)] || queued[static_cast<size_t>(v)]) return;
        queued[static_cast<size_t>(v)] = 1;
        queue.push_back(v);
    };
    while (qi < queue.size()) {
        Vertex v = queue[qi++];
        queued[static_cast<size_t>(v)] = 0;
        if (peeled[static_cast<size_t>(v)] || !candidate(static_cast<size_t>(v))) continue;

        if (rcnt[static_cast<size_t>(v)] == 0) {
            if (bcnt[static_cast<size_t>(v)] > 0) {  // splice the B' child past v
                Vertex w = bhead[static_cast<size_t>(v)];
                unlink(bhead, bprev, bnext, bcnt, v, w);
                b2[static_cast<size_t>(w)] = b2[static_cast<size_t>(v)];
                link(bhead, bprev, bnext, bcnt, b2[static_cast<size_t>(w)], w);
                push(w);
            }
        } else if (bcnt[static_cast<size_t>(v)] == 0) {
            Vertex w = rhead[static_cast<size_t>(v)];
            unlink(rhead, rprev, rnext, rcnt, v, w);
            r2[static_cast<size_t>(w)] = r2[static_cast<size_t>(v)];
            link(rhead, rprev, rnext, rcnt, r2[static_cast<size_t>(w)], w);
            push(w);
        } else {
            throw NoPeelableVertex();  // in-degree 2 with a child in each tree
        }

        peeled[static_cast<size_t>(v)] = 1;
        peels.push_back({v, b2[static_cast<size_t>(v)], r2[static_cast<size_t>(v)]});
        unlink(bhead, bprev, bnext, bcnt, b2[static_cast<size_t>(v)], v);
        unlink(rhead, rprev, rnext, rcnt, r2[static_cast<size_t>(v)], v);
        push(b2[static_cast<size_t>(v)]);
        push(r2[static_cast<size_t>(v)]);
    }
    if (peels.size() != n - 1) throw NoPeelableVertex();

    // Insertions in reverse peel order.
    std::vector<InsertOp> ops;
    ops.reserve(n - 1);
    for (size_t i = peels.size(); i-- > 0;) {
        const Peel& p = peels[i];
        if (p.b == d.parent[static_cast<size_t>(p.v)])
            ops.push_back({p.v, kNoVertex, kNoVertex, false});
        else
            ops.push_back({p.v, p.b, p.r, false});
    }
    return assemble_order(d, ops);
}

}  // namespace domcert
