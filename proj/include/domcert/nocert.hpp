#ifndef DOMCERT_NOCERT_HPP
#define DOMCERT_NOCERT_HPP

#include <span>

#include "domcert/certifier.hpp"
#include "domcert/graph.hpp"

namespace domcert {

// Secondary verification paths that check a claimed dominator tree without a
// low-high certificate. Unlike verify(), these lean on the derived graph and
// the loop nesting forest, so they are not part of the minimal certifier.

/// Reducible graphs only: accepts iff the claimed tree has the parent
/// property and every v != s has the arc (t(v), v) or derived in-degree at
/// least two (distinct tails). Throws NotReducible when the graph is cyclic
/// after deleting arcs into claimed ancestors.
Verdict verify_reducible_nocert(const FlowGraph& g, std::span<const Vertex> claimed_parent);

/// Arbitrary graphs: accepts iff the claimed tree has the parent property
/// and, for every u != s, f(u) = t(u) or some arc (y, w) with y < u in
/// reverse postorder enters u's loop with a derived tail different from
/// f'(u).
Verdict verify_loops_nocert(const FlowGraph& g, std::span<const Vertex> claimed_parent);

}  // namespace domcert

#endif
