#ifndef DOMCERT_GENERATORS_HPP
#define DOMCERT_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "domcert/graph.hpp"

namespace domcert {

/// splitmix64: tiny, splittable, bit-exact across platforms, so every
/// generated fixture reproduces anywhere.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// Uniform-ish value in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
    SplitMix64 split() { return SplitMix64(next() ^ 0x9e3779b97f4a7c15ULL); }
};

enum class Family {
    kRandomFlow,  // random arborescence from s plus extra random arcs
    kRandomDag,   // arcs forward along a random permutation
    kReducible,   // dag skeleton plus back arcs into dominators
    kLadder,      // chain of diamonds with a back arc per rung
    kComplete,    // all arcs except into s
    kFig1,        // checked-in figure fixtures
    kFig2,
    kFig6,
    kFig7,
    kFig10,
    kFig12,
    kFig14,
};

struct GenSpec {
    Family family = Family::kRandomFlow;
    Vertex n = 0;
    ArcId m = 0;  // ignored by ladder/complete/figure families
    std::uint64_t seed = 0;
};

struct GraphData {
    Vertex n = 0;
    Vertex s = 0;
    std::vector<Arc> arcs;
};

/// Deterministic per spec; identical GenSpec gives an identical graph.
/// Throws InfeasibleSpec when the sizes cannot be met.
GraphData generate_data(const GenSpec& spec);
FlowGraph generate(const GenSpec& spec);

/// Family name parsing for the CLI ("random-flow", "fig7", ...).
Family parse_family(const std::string& name);
std::string family_name(Family f);

}  // namespace domcert

#endif
