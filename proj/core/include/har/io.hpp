#ifndef HAR_IO_HPP
#define HAR_IO_HPP

#include "har/har.hpp"
#include "har/hypergraph.hpp"
#include "har/signature.hpp"

#include <iosfwd>
#include <string>

namespace har {

// Text interchange formats, all versioned with a leading "har-v1" token.
//
// Diagram files carry, in order: the version token, the embedded signature,
// the type, the node count, the adjacency triples, both boundary orders and
// the node labels:
//
//   har-v1
//   sig <count>
//   <name> <arity> <coarity>      (count lines)
//   type <A> <B>
//   nodes <K>
//   adj <nnz>
//   <row> <col> <label>           (nnz lines)
//   left <K indices>
//   right <K indices>
//   labels <K tokens: w | b:<opname>>
//
// Hypergraph dumps use the analogous "hyp-v1" layout with explicit source
// and target lists per hyperedge.  Writers emit canonical text, so
// write(read(text)) reproduces the input byte for byte.

void write_har(std::ostream& out, const Har& h);
Har read_har(std::istream& in);  // throws std::runtime_error on malformed input

void write_hypergraph(std::ostream& out, const MaHypergraph& h);
MaHypergraph read_hypergraph(std::istream& in);

// Signature files: one "name arity coarity" line per operation.
void write_signature(std::ostream& out, const Signature& sig);
SignaturePtr read_signature(std::istream& in);

std::string har_to_string(const Har& h);
Har har_from_string(const std::string& text);

}  // namespace har

#endif  // HAR_IO_HPP
