#include "domcert/graph.hpp"

#include <algorithm>
#include <atomic>

namespace domcert {

namespace {
std::atomic<std::uint64_t> next_stamp{1};
}

void FlowGraph::finish(Vertex n, Vertex s, std::vector<Vertex>&& tails,
                       std::vector<Vertex>&& heads) {
    n_ = n;
    s_ = s;
    tails_ = std::move(tails);
    heads_ = std::move(heads);
    stamp_ = next_stamp.fetch_add(1, std::memory_order_relaxed);

    const size_t m = tails_.size();
    out_start_.assign(static_cast<size_t>(n) + 1, 0);
    in_start_.assign(static_cast<size_t>(n) + 1, 0);
    for (size_t a = 0; a < m; ++a) {
        ++out_start_[static_cast<size_t>(tails_[a]) + 1];
        ++in_start_[static_cast<size_t>(heads_[a]) + 1];
    }
    for (size_t v = 0; v < static_cast<size_t>(n); ++v) {
        out_start_[v + 1] += out_start_[v];
        in_start_[v + 1] += in_start_[v];
    }
    adj_.assign(2 * m, 0);
    std::vector<ArcId> pos(out_start_.begin(), out_start_.end() - 1);
    for (size_t a = 0; a < m; ++a)
        adj_[static_cast<size_t>(pos[static_cast<size_t>(tails_[a])]++)] = static_cast<ArcId>(a);
    pos.assign(in_start_.begin(), in_start_.end() - 1);
    for (size_t a = 0; a < m; ++a)
        adj_[m + static_cast<size_t>(pos[static_cast<size_t>(heads_[a])]++)] =
            static_cast<ArcId>(a);
    // in lists live in the second half of adj_
    for (auto& o : in_start_) o += static_cast<ArcId>(m);
}

FlowGraph FlowGraph::build(Vertex n, Vertex s, std::span<const Arc> raw_arcs,
                           BuildOptions opts) {
    if (n <= 0) throw InvalidVertex(n);
    if (s < 0 || s >= n) throw InvalidVertex(s);

    std::vector<Vertex> tails, heads;
    tails.reserve(raw_arcs.size());
    heads.reserve(raw_arcs.size());
    for (const auto& [u, v] : raw_arcs) {
        if (u < 0 || u >= n) throw InvalidVertex(u);
        if (v < 0 || v >= n) throw InvalidVertex(v);
        if (v == s) continue;  // arcs entering the start are irrelevant
        tails.push_back(u);
        heads.push_back(v);
    }

    // Reachability check over the kept arcs.
    std::vector<ArcId> first(static_cast<size_t>(n) + 1, 0);
    for (Vertex t : tails) ++first[static_cast<size_t>(t) + 1];
    for (size_t v = 0; v < static_cast<size_t>(n); ++v) first[v + 1] += first[v];
    std::vector<Vertex> succ(tails.size());
    {
        std::vector<ArcId> pos(first.begin(), first.end() - 1);
        for (size_t a = 0; a < tails.size(); ++a)
            succ[static_cast<size_t>(pos[static_cast<size_t>(tails[a])]++)] = heads[a];
    }
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<Vertex> stack{s};
    seen[static_cast<size_t>(s)] = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (ArcId a = first[static_cast<size_t>(v)]; a < first[static_cast<size_t>(v) + 1]; ++a) {
            Vertex w = succ[static_cast<size_t>(a)];
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }

    FlowGraph g;
    if (std::find(seen.begin(), seen.end(), 0) == seen.end()) {
        g.finish(n, s, std::move(tails), std::move(heads));
        return g;
    }
    if (!opts.prune_unreachable) {
        for (Vertex v = 0; v < n; ++v)
            if (!seen[static_cast<size_t>(v)]) throw UnreachableVertex(v);
    }

    // Prune: keep reachable vertices, compact ids preserving order.
    std::vector<Vertex> remap(static_cast<size_t>(n), kNoVertex);
    std::vector<Vertex> original;
    for (Vertex v = 0; v < n; ++v) {
        if (seen[static_cast<size_t>(v)]) {
            remap[static_cast<size_t>(v)] = static_cast<Vertex>(original.size());
            original.push_back(v);
        }
    }
    std::vector<Vertex> ptails, pheads;
    ptails.reserve(tails.size());
    pheads.reserve(heads.size());
    for (size_t a = 0; a < tails.size(); ++a) {
        if (seen[static_cast<size_t>(tails[a])]) {  // head is then reachable too
            ptails.push_back(remap[static_cast<size_t>(tails[a])]);
            pheads.push_back(remap[static_cast<size_t>(heads[a])]);
        }
    }
    g.finish(static_cast<Vertex>(original.size()), remap[static_cast<size_t>(s)],
             std::move(ptails), std::move(pheads));
    g.original_ids_ = std::move(original);
    return g;
}

bool FlowGraph::has_arc(Vertex u, Vertex v) const {
    auto arcs = out_arcs(u);
    for (ArcId a : arcs)
        if (head(a) == v) return true;
    return false;
}

}  // namespace domcert
