#ifndef HAR_HAR_HPP
#define HAR_HAR_HPP

#include "har/perm.hpp"
#include "har/signature.hpp"
#include "har/sparse.hpp"
#include "har/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace har {

// Adjacency representation of a string diagram of type A -> B: a labeled
// adjacency matrix over the bipartite wire/box encoding, two boundary
// permutations and a node label vector.
//
// Invariants (checked by validate()):
//  - the adjacency matrix is acyclic;
//  - reordered by left_order, the first A nodes are the left interface;
//    reordered by right_order, the last B nodes are the right interface;
//  - interface nodes are wires; a wire has in- and out-degree at most one,
//    in-degree 0 exactly when it is a left interface node and out-degree 0
//    exactly when it is a right interface node;
//  - a box of arity m / coarity n has incoming edges labeled exactly 1..m
//    and outgoing edges labeled exactly 1..n, each once;
//  - every edge joins a wire and a box.
struct Har {
    Nat left_arity = 0;    // A
    Nat right_arity = 0;   // B
    NatMat adjacency;      // K x K; column = source node
    Perm left_order;       // L
    Perm right_order;      // R
    std::vector<NodeLabel> labels;
    SignaturePtr sig;      // may be null when there are no boxes

    NodeId node_count() const { return static_cast<NodeId>(labels.size()); }

    // Checked construction; throws when the component sizes disagree.
    static Har make(Nat left_arity, Nat right_arity, NatMat adjacency, Perm left_order,
                    Perm right_order, std::vector<NodeLabel> labels, SignaturePtr sig);

    static Har identity(Nat a, SignaturePtr sig = nullptr);
    // symmetry(a, b) : a + b -> b + a routes the leading a wires past the
    // trailing b wires.
    static Har symmetry(Nat a, Nat b, SignaturePtr sig = nullptr);
    // The diagram of a single generator: input wires, one box, output wires.
    static Har singleton(SignaturePtr sig, OpId op);
    // Wiring-only diagram: K wires, output j connected to input p[j].
    static Har permutation(const Perm& p, SignaturePtr sig = nullptr);

    bool operator==(const Har& other) const;
};

struct Violation {
    std::string clause;
    NodeId node;  // node_count() when no single node is at fault
};

// std::nullopt when all invariants hold, otherwise the first violated
// clause and the offending node.
std::optional<Violation> validate(const Har& h);

// Renumbers nodes by p: node at position i of the result is node p[i] of
// the input.  The result is permutation-equivalent to the input via p.
Har reorder_nodes(const Har& h, const Perm& p);

// Equivalent representation with the left (right) interface occupying the
// first (last) storage positions and an identity boundary permutation.
Har left_boundary_order(const Har& h);
Har right_boundary_order(const Har& h);

Har tensor(const Har& f, const Har& g);
// Sequential composition along the shared boundary; throws when
// f.right_arity != g.left_arity.  Linear in f.K + g.K.
Har compose(const Har& f, const Har& g);

// True iff g equals f renumbered by p: adjacency and labels transport
// entrywise, and the boundary orders transport on the interface positions
// they single out (their non-interface tails are storage bookkeeping and
// are not compared).
bool check_permeq(const Har& f, const Har& g, const Perm& p);

// Deterministic renumbering used by canonicalize(): interface-seeded
// traversal expanding box outputs in label order; components unreachable
// from the left interface are scheduled by readiness with a label
// tie-break.  Stable under node renumbering except for diagrams with
// several identical-label source boxes.
Perm canonical_order(const Har& h);
Har canonicalize(const Har& h);

// True iff the two representations have the same type and are equal after
// canonicalize().
bool iso_eq(const Har& f, const Har& g);

// A permutation p with check_permeq(f, g, p), when one is found via the
// canonical forms.
std::optional<Perm> find_permeq_witness(const Har& f, const Har& g);

// Row/column occupancy bounds implied by the signature: rows carry at most
// max(arity) entries and columns at most max(coarity), floored at 1.
bool check_bounded_sparsity(const Har& h);

// The common signature of two operands (either may be null); throws when
// both are present and differ.
SignaturePtr merge_signatures(const Har& f, const Har& g);

}  // namespace har

#endif  // HAR_HAR_HPP
