#ifndef HAR_HYPERGRAPH_HPP
#define HAR_HYPERGRAPH_HPP

#include "har/har.hpp"
#include "har/signature.hpp"
#include "har/types.hpp"

#include <optional>
#include <vector>

namespace har {

struct Hyperedge {
    OpId op;
    std::vector<NodeId> sources;
    std::vector<NodeId> targets;
    bool operator==(const Hyperedge&) const = default;
};

// Monogamous-acyclic hypergraph with ordered interfaces, the direct
// cospan-of-hypergraphs picture.  Deliberately naive: this type is the
// correctness oracle for the adjacency representation, not a fast path.
struct MaHypergraph {
    NodeId node_count = 0;  // node ids are 0..node_count-1
    std::vector<Hyperedge> edges;
    std::vector<NodeId> left;
    std::vector<NodeId> right;
    SignaturePtr sig;
};

// std::nullopt when monogamy, acyclicity and the interface conditions all
// hold (left = in-degree-0 nodes, right = out-degree-0 nodes, in order-free
// set terms; both duplicate-free).
std::optional<Violation> validate_ma(const MaHypergraph& h);

// Glue f's right interface to g's left interface position by position
// (pushout along the shared boundary); interfaces become f.left / g.right.
MaHypergraph compose_pushout(const MaHypergraph& f, const MaHypergraph& g);

// Disjoint union with concatenated interfaces.
MaHypergraph tensor_disjoint(const MaHypergraph& f, const MaHypergraph& g);

// Bipartite encoding: one wire node per hypergraph node, one box node per
// hyperedge, port positions as edge labels.
Har to_har(const MaHypergraph& h);

// Inverse reading: boxes back to hyperedges, interfaces read off the
// boundary orders.  Throws when the input is not valid.
MaHypergraph from_har(const Har& h);

// Label-, order- and interface-preserving isomorphism, decided through the
// canonical form of the adjacency encoding.
bool hyp_iso(const MaHypergraph& f, const MaHypergraph& g);

}  // namespace har

#endif  // HAR_HYPERGRAPH_HPP
