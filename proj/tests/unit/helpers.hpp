#ifndef DOMCERT_TEST_HELPERS_HPP
#define DOMCERT_TEST_HELPERS_HPP

#include <doctest.h>

#include <fstream>
#include <string>
#include <vector>

#include "domcert/generators.hpp"
#include "domcert/graph.hpp"
#include "domcert/io.hpp"

namespace domcert::test {

inline FlowGraph make(Vertex n, Vertex s, std::vector<Arc> arcs) {
    return FlowGraph::build(n, s, arcs);
}

inline FlowGraph chain3() { return make(3, 0, {{0, 1}, {1, 2}}); }

inline FlowGraph diamond() { return make(4, 0, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

inline FlowGraph fixture(const std::string& name) {
    std::ifstream in(std::string(DOMCERT_FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    GraphData d = read_graph(in);
    return FlowGraph::build(d.n, d.s, d.arcs);
}

inline FlowGraph random_flow_graph(Vertex n, ArcId m, std::uint64_t seed) {
    return generate(GenSpec{Family::kRandomFlow, n, m, seed});
}

// Small corpus of random flow graphs for property tests.
inline std::vector<FlowGraph> corpus(int count, Vertex max_n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<FlowGraph> graphs;
    graphs.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        Vertex n = 2 + static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(max_n - 1)));
        ArcId lo = n - 1;
        ArcId m = lo + static_cast<ArcId>(rng.below(static_cast<std::uint64_t>(3 * n + 1)));
        graphs.push_back(random_flow_graph(n, m, rng.next()));
    }
    return graphs;
}

}  // namespace domcert::test

#endif
