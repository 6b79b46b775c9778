#include "domcert/tree.hpp"

namespace domcert {

Vertex RootedTree::nca(Vertex v, Vertex w) const {
    while (v != w) {
        if (rank[static_cast<size_t>(v)] > rank[static_cast<size_t>(w)])
            v = parent[static_cast<size_t>(v)];
        else
            w = parent[static_cast<size_t>(w)];
    }
    return v;
}

namespace {

// Children lists in one CSR block, child order = increasing id.
struct ChildLists {
    std::vector<ArcId> first;
    std::vector<Vertex> child;
};

ChildLists children_by_id(Vertex root, std::span<const Vertex> parent) {
    const auto n = static_cast<size_t>(parent.size());
    ChildLists c;
    c.first.assign(n + 1, 0);
    for (size_t v = 0; v < n; ++v) {
        Vertex p = parent[v];
        if (static_cast<Vertex>(v) == root) {
            if (p != kNoVertex) throw MismatchedInputs("root must have no parent");
            continue;
        }
        if (p < 0 || p >= static_cast<Vertex>(n))
            throw MismatchedInputs("parent out of range");
        ++c.first[static_cast<size_t>(p) + 1];
    }
    for (size_t v = 0; v < n; ++v) c.first[v + 1] += c.first[v];
    c.child.assign(n > 0 ? n - 1 : 0, 0);
    std::vector<ArcId> pos(c.first.begin(), c.first.end() - 1);
    for (size_t v = 0; v < n; ++v) {
        if (static_cast<Vertex>(v) == root) continue;
        c.child[static_cast<size_t>(pos[static_cast<size_t>(parent[v])]++)] =
            static_cast<Vertex>(v);
    }
    return c;
}

}  // namespace

RootedTree tree_from_parents(Vertex root, std::span<const Vertex> parent) {
    const auto n = static_cast<size_t>(parent.size());
    RootedTree t;
    t.root = root;
    t.parent.assign(parent.begin(), parent.end());
    t.rank.assign(n, 0);
    t.size.assign(n, 1);
    t.by_rank.clear();
    t.by_rank.reserve(n);

    ChildLists c = children_by_id(root, parent);
    std::vector<std::pair<Vertex, ArcId>> stack;
    stack.reserve(n);
    stack.emplace_back(root, c.first[static_cast<size_t>(root)]);
    Vertex counter = 0;
    t.rank[static_cast<size_t>(root)] = ++counter;
    t.by_rank.push_back(root);
    while (!stack.empty()) {
        auto& [v, it] = stack.back();
        if (it < c.first[static_cast<size_t>(v) + 1]) {
            Vertex w = c.child[static_cast<size_t>(it++)];
            t.rank[static_cast<size_t>(w)] = ++counter;
            t.by_rank.push_back(w);
            stack.emplace_back(w, c.first[static_cast<size_t>(w)]);
        } else {
            Vertex done = v;
            stack.pop_back();
            if (!stack.empty())
                t.size[static_cast<size_t>(stack.back().first)] +=
                    t.size[static_cast<size_t>(done)];
        }
    }
    if (counter != static_cast<Vertex>(n))
        throw MismatchedInputs("parent links do not form a tree on all vertices");
    return t;
}

RootedTree tree_with_order(Vertex root, std::span<const Vertex> parent,
                           std::span<const Vertex> rank) {
    const auto n = static_cast<size_t>(parent.size());
    RootedTree t;
    t.root = root;
    t.parent.assign(parent.begin(), parent.end());
    t.rank.assign(rank.begin(), rank.end());
    t.size.assign(n, 1);
    t.by_rank.assign(n, kNoVertex);
    for (size_t v = 0; v < n; ++v) {
        Vertex r = rank[v];
        if (r < 1 || r > static_cast<Vertex>(n) ||
            t.by_rank[static_cast<size_t>(r - 1)] != kNoVertex)
            throw MismatchedInputs("rank is not a permutation of 1..n");
        t.by_rank[static_cast<size_t>(r - 1)] = static_cast<Vertex>(v);
    }
    // Sizes accumulate bottom-up; in a preorder every parent precedes its child.
    for (size_t k = n; k-- > 1;) {
        Vertex v = t.by_rank[k];
        Vertex p = t.parent[static_cast<size_t>(v)];
        if (p == kNoVertex || t.rank[static_cast<size_t>(p)] >= t.rank[static_cast<size_t>(v)])
            throw MismatchedInputs("rank is not a preorder of the tree");
        t.size[static_cast<size_t>(p)] += t.size[static_cast<size_t>(v)];
    }
    return t;
}

}  // namespace domcert
