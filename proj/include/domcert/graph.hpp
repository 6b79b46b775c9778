#ifndef DOMCERT_GRAPH_HPP
#define DOMCERT_GRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "domcert/errors.hpp"

namespace domcert {

using Arc = std::pair<Vertex, Vertex>;  // (tail, head)

struct BuildOptions {
    // Drop vertices unreachable from s and compact ids instead of failing.
    bool prune_unreachable = false;
};

/// Immutable flow graph: dense vertex ids 0..n-1, designated start vertex,
/// arcs kept in insertion order. Arcs entering the start vertex are dropped
/// at construction; parallel arcs and self-loops are kept.
class FlowGraph {
public:
    static FlowGraph build(Vertex n, Vertex s, std::span<const Arc> raw_arcs,
                           BuildOptions opts = {});
    static FlowGraph build(Vertex n, Vertex s, const std::vector<Arc>& raw_arcs,
                           BuildOptions opts = {}) {
        return build(n, s, std::span<const Arc>(raw_arcs), opts);
    }

    Vertex vertex_count() const { return n_; }
    Vertex start() const { return s_; }
    ArcId arc_count() const { return static_cast<ArcId>(tails_.size()); }

    Vertex tail(ArcId a) const { return tails_[static_cast<size_t>(a)]; }
    Vertex head(ArcId a) const { return heads_[static_cast<size_t>(a)]; }
    Arc arc(ArcId a) const { return {tail(a), head(a)}; }

    /// Arc ids leaving v, in arc insertion order.
    std::span<const ArcId> out_arcs(Vertex v) const {
        return {adj_.data() + out_start_[static_cast<size_t>(v)],
                adj_.data() + out_start_[static_cast<size_t>(v) + 1]};
    }
    /// Arc ids entering v, in arc insertion order.
    std::span<const ArcId> in_arcs(Vertex v) const {
        return {adj_.data() + in_start_[static_cast<size_t>(v)],
                adj_.data() + in_start_[static_cast<size_t>(v) + 1]};
    }

    /// True iff some arc (u, v) exists.
    bool has_arc(Vertex u, Vertex v) const;

    /// Non-empty iff the graph was built with prune_unreachable and vertices
    /// were dropped; maps compact ids back to the caller's ids.
    const std::vector<Vertex>& original_ids() const { return original_ids_; }

    /// Distinguishes graphs so derived results can be checked against the
    /// graph they came from.
    std::uint64_t stamp() const { return stamp_; }

private:
    FlowGraph() = default;
    void finish(Vertex n, Vertex s, std::vector<Vertex>&& tails, std::vector<Vertex>&& heads);

    Vertex n_ = 0;
    Vertex s_ = 0;
    std::vector<Vertex> tails_, heads_;
    std::vector<ArcId> adj_;  // out lists followed by in lists
    std::vector<ArcId> out_start_, in_start_;
    std::vector<Vertex> original_ids_;
    std::uint64_t stamp_ = 0;
};

}  // namespace domcert

#endif
