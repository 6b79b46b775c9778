#ifndef DOMCERT_IO_HPP
#define DOMCERT_IO_HPP

#include <iosfwd>

#include "domcert/certifier.hpp"
#include "domcert/generators.hpp"
#include "domcert/graph.hpp"
#include "domcert/lowhigh_order.hpp"

namespace domcert {

// Graph files are line oriented:
//   p <n> <m> <s>
//   a <u> <v>        (exactly m of these, 0-based ids)
// '#' comments and blank lines are ignored; LF or CRLF both work.
GraphData read_graph(std::istream& in);
void write_graph(std::ostream& out, const GraphData& g);
void write_graph(std::ostream& out, const FlowGraph& g);

// Certificate files:
//   d <n>
//   t <v> <parent(v)> <rank(v)>    (one line per v != s, any order)
// rank(s) is implicitly 1.
struct CertData {
    Vertex n = 0;
    DomCertificate cert;
};
CertData read_certificate(std::istream& in, Vertex s);
void write_certificate(std::ostream& out, Vertex s, const std::vector<Vertex>& parent,
                       const std::vector<Vertex>& rank);

}  // namespace domcert

#endif
