#include "domcert/offline_list.hpp"

#include <string>

namespace domcert {

ListResult run_script(const ListScript& script) {
    const int n = script.items;
    const int root = n;  // artificial root of the insertion tree

    // Phase 1 (off-line): insertion tree and subtree sizes.
    std::vector<int> parent(static_cast<size_t>(n), -2);
    std::vector<int> order(static_cast<size_t>(n), -1);  // script position of the insert
    int inserted = 0;
    for (size_t i = 0; i < script.ops.size(); ++i) {
        const ListOp& op = script.ops[i];
        if (op.kind == ListOp::Kind::kAfter) continue;
        if (op.x < 0 || op.x >= n) throw MalformedScript("item id out of range");
        if (parent[static_cast<size_t>(op.x)] != -2)
            throw MalformedScript("item inserted twice: " + std::to_string(op.x));
        if (op.kind == ListOp::Kind::kInsertRel) {
            if (op.y < 0 || op.y >= n || parent[static_cast<size_t>(op.y)] == -2 ||
                op.y == op.x)
                throw MalformedScript("anchor not inserted before item " +
                                      std::to_string(op.x));
            parent[static_cast<size_t>(op.x)] = op.y;
        } else {
            parent[static_cast<size_t>(op.x)] = root;
        }
        order[static_cast<size_t>(op.x)] = static_cast<int>(inserted++);
    }
    if (inserted != n) throw MalformedScript("some items are never inserted");

    std::vector<int> size(static_cast<size_t>(n) + 1, 1);
    size[static_cast<size_t>(root)] = 0;  // the root contributes no item slot
    // Children were inserted after their parents, so one reverse sweep works.
    std::vector<int> by_order(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) by_order[static_cast<size_t>(order[static_cast<size_t>(x)])] = x;
    for (int k = n; k-- > 0;) {
        int x = by_order[static_cast<size_t>(k)];
        size[static_cast<size_t>(parent[static_cast<size_t>(x)])] +=
            size[static_cast<size_t>(x)];
    }

    // Phase 2 (on-line): disjoint intervals. lo/hi are inclusive bounds; an
    // absent item has lo = -1.
    std::vector<int> lo(static_cast<size_t>(n) + 1, -1), hi(static_cast<size_t>(n) + 1, -1);
    lo[static_cast<size_t>(root)] = 0;
    hi[static_cast<size_t>(root)] = size[static_cast<size_t>(root)];  // [0, N]

    auto in_list = [&](int x) { return x >= 0 && x < n && lo[static_cast<size_t>(x)] >= 0; };
    AfterQuery after = [&](int x, int y) {
        if (!in_list(x) || !in_list(y))
            throw MalformedScript("after() on an item not in the list");
        return lo[static_cast<size_t>(x)] > hi[static_cast<size_t>(y)];
    };

    ListResult result;
    for (const ListOp& op : script.ops) {
        switch (op.kind) {
            case ListOp::Kind::kAfter:
                result.after_answers.push_back(after(op.x, op.y));
                break;
            case ListOp::Kind::kInsert: {
                int sz = size[static_cast<size_t>(op.x)];
                int j = hi[static_cast<size_t>(root)];
                hi[static_cast<size_t>(root)] = j - sz;
                lo[static_cast<size_t>(op.x)] = j - sz + 1;
                hi[static_cast<size_t>(op.x)] = j;  // first in the list
                break;
            }
            case ListOp::Kind::kInsertRel: {
                bool go_after = op.test ? op.test(after) : false;
                int sz = size[static_cast<size_t>(op.x)];
                int i = lo[static_cast<size_t>(op.y)], j = hi[static_cast<size_t>(op.y)];
                if (go_after) {
                    hi[static_cast<size_t>(op.y)] = j - sz;
                    lo[static_cast<size_t>(op.x)] = j - sz + 1;
                    hi[static_cast<size_t>(op.x)] = j;
                } else {
                    lo[static_cast<size_t>(op.x)] = i;
                    hi[static_cast<size_t>(op.x)] = i + sz - 1;
                    lo[static_cast<size_t>(op.y)] = i + sz;
                }
                break;
            }
        }
    }

    // Every interval has shrunk to a point; the root ends at [0, 0].
    result.rank.assign(static_cast<size_t>(n), 0);
    for (int x = 0; x < n; ++x) result.rank[static_cast<size_t>(x)] = lo[static_cast<size_t>(x)];
    return result;
}

}  // namespace domcert
