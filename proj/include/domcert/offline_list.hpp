#ifndef DOMCERT_OFFLINE_LIST_HPP
#define DOMCERT_OFFLINE_LIST_HPP

#include <functional>
#include <vector>

#include "domcert/errors.hpp"

namespace domcert {

/// after(x, y): true iff x is after y in the current list.
using AfterQuery = std::function<bool(int, int)>;

/// Deferred test for a relative insertion, evaluated at execution time with
/// an after-query capability. Must be a bounded combination of after queries
/// over items already in the list.
using InsertTest = std::function<bool(const AfterQuery&)>;

struct ListOp {
    enum class Kind { kInsert, kInsertRel, kAfter };
    Kind kind;
    int x = -1;
    int y = -1;       // anchor for kInsertRel, second argument for kAfter
    InsertTest test;  // kInsertRel only; true = insert just after y

    static ListOp insert(int x) { return {Kind::kInsert, x, -1, {}}; }
    static ListOp insert_rel(int x, int y, InsertTest test) {
        return {Kind::kInsertRel, x, y, std::move(test)};
    }
    static ListOp after(int x, int y) { return {Kind::kAfter, x, y, {}}; }
};

/// Pre-declared script over items 0..items-1. Every item must be inserted
/// exactly once; a relative insert's anchor must be inserted strictly earlier
/// in the script.
struct ListScript {
    int items = 0;
    std::vector<ListOp> ops;
};

struct ListResult {
    std::vector<int> rank;             // final position, 1..items
    std::vector<bool> after_answers;   // answers to explicit kAfter ops, in order
};

/// Off-line execution via the insertion tree: subtree sizes are reserved as
/// integer intervals, splits answer order queries, and the surviving
/// singleton intervals are the final positions. Insert places the item first
/// in the list. O(total ops). Throws MalformedScript on contract violations.
ListResult run_script(const ListScript& script);

}  // namespace domcert

#endif
