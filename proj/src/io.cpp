#include "domcert/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace domcert {

namespace {

// Next content line, with comments, blanks, and a trailing CR stripped.
bool next_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t i = line.find_first_not_of(" \t");
        if (i == std::string::npos || line[i] == '#') continue;
        return true;
    }
    return false;
}

long long parse_int(std::istringstream& ss, int lineno, const char* what) {
    long long x;
    if (!(ss >> x)) throw ParseError(lineno, std::string("expected ") + what);
    return x;
}

}  // namespace

GraphData read_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!next_line(in, line, lineno)) throw ParseError(lineno, "missing problem line");
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag != "p") throw ParseError(lineno, "expected problem line 'p <n> <m> <s>'");
    long long n = parse_int(ss, lineno, "vertex count");
    long long m = parse_int(ss, lineno, "arc count");
    long long s = parse_int(ss, lineno, "start vertex");
    if (n < 1 || m < 0 || s < 0 || s >= n) throw ParseError(lineno, "bad problem line values");

    GraphData g;
    g.n = static_cast<Vertex>(n);
    g.s = static_cast<Vertex>(s);
    g.arcs.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_line(in, line, lineno))
            throw ParseError(lineno, "expected " + std::to_string(m) + " arcs, got " +
                                         std::to_string(i));
        std::istringstream as(line);
        as >> tag;
        if (tag != "a") throw ParseError(lineno, "expected arc line 'a <u> <v>'");
        long long u = parse_int(as, lineno, "arc tail");
        long long v = parse_int(as, lineno, "arc head");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(lineno, "arc endpoint out of range");
        g.arcs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (next_line(in, line, lineno)) throw ParseError(lineno, "trailing content after arcs");
    return g;
}

void write_graph(std::ostream& out, const GraphData& g) {
    out << "p " << g.n << ' ' << g.arcs.size() << ' ' << g.s << '\n';
    for (const auto& [u, v] : g.arcs) out << "a " << u << ' ' << v << '\n';
}

void write_graph(std::ostream& out, const FlowGraph& g) {
    out << "p " << g.vertex_count() << ' ' << g.arc_count() << ' ' << g.start() << '\n';
    for (ArcId a = 0; a < g.arc_count(); ++a)
        out << "a " << g.tail(a) << ' ' << g.head(a) << '\n';
}

CertData read_certificate(std::istream& in, Vertex s) {
    std::string line;
    int lineno = 0;
    if (!next_line(in, line, lineno)) throw ParseError(lineno, "missing 'd <n>' line");
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag != "d") throw ParseError(lineno, "expected 'd <n>'");
    long long n = parse_int(ss, lineno, "vertex count");
    if (n < 1) throw ParseError(lineno, "bad vertex count");
    if (s < 0 || s >= n) throw ParseError(lineno, "start vertex out of range");

    CertData c;
    c.n = static_cast<Vertex>(n);
    c.cert.claimed_parent.assign(static_cast<size_t>(n), kNoVertex);
    c.cert.claimed_rank.assign(static_cast<size_t>(n), 0);
    c.cert.claimed_rank[static_cast<size_t>(s)] = 1;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (long long i = 0; i + 1 < n; ++i) {
        if (!next_line(in, line, lineno))
            throw ParseError(lineno, "expected " + std::to_string(n - 1) + " tree lines");
        std::istringstream ts(line);
        ts >> tag;
        if (tag != "t") throw ParseError(lineno, "expected tree line 't <v> <parent> <rank>'");
        long long v = parse_int(ts, lineno, "vertex");
        long long p = parse_int(ts, lineno, "parent");
        long long r = parse_int(ts, lineno, "rank");
        if (v < 0 || v >= n || v == s) throw ParseError(lineno, "bad vertex id");
        if (seen[static_cast<size_t>(v)]) throw ParseError(lineno, "duplicate vertex line");
        seen[static_cast<size_t>(v)] = 1;
        // parent/rank stay unvalidated: rejecting garbage is the verifier's job
        c.cert.claimed_parent[static_cast<size_t>(v)] =
            static_cast<Vertex>(std::clamp<long long>(p, -1, n));
        c.cert.claimed_rank[static_cast<size_t>(v)] =
            static_cast<Vertex>(std::clamp<long long>(r, -1, n + 1));
    }
    if (next_line(in, line, lineno)) throw ParseError(lineno, "trailing content");
    return c;
}

void write_certificate(std::ostream& out, Vertex s, const std::vector<Vertex>& parent,
                       const std::vector<Vertex>& rank) {
    out << "d " << parent.size() << '\n';
    for (size_t v = 0; v < parent.size(); ++v) {
        if (static_cast<Vertex>(v) == s) continue;
        out << "t " << v << ' ' << parent[v] << ' ' << rank[v] << '\n';
    }
}

}  // namespace domcert
