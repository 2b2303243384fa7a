#include "har/har.hpp"

#include "doctest.h"
#include "har/circuits.hpp"
#include "har/term.hpp"
#include "support.hpp"

#include <random>

using namespace har;
using har::testing::golden_har;
using har::testing::random_perm;
using har::testing::TermGen;

namespace {

Har random_har(TermGen& gen, int budget) {
    return eval_har(*gen.term(budget), bool_signature());
}

}  // namespace

TEST_CASE("validate accepts the constructors") {
    CHECK_FALSE(validate(Har::identity(3)));
    CHECK_FALSE(validate(Har::identity(0)));
    CHECK_FALSE(validate(Har::symmetry(1, 1)));
    CHECK_FALSE(validate(Har::symmetry(0, 4)));
    CHECK_FALSE(validate(Har::permutation(Perm::block_swap(2, 3))));
    CHECK_FALSE(validate(golden_har()));
}

TEST_CASE("validate names the violated clause") {
    Har g = golden_har();

    SUBCASE("mutated incoming edge label") {
        // The label-2 edge into gamma becomes label 3.
        auto es = g.adjacency.entries();
        for (auto& e : es) {
            if (e.row == 6 && e.col == 4) {
                e.value = 3;
            }
        }
        g.adjacency = NatMat::from_triples(9, 9, es);
        auto v = validate(g);
        REQUIRE(v);
        CHECK(v->clause == "box incoming labels not contiguous");
        CHECK(v->node == 6);
    }

    SUBCASE("mutated outgoing edge label") {
        auto es = g.adjacency.entries();
        for (auto& e : es) {
            if (e.row == 8 && e.col == 3) {
                e.value = 1;  // beta now emits port 1 twice
            }
        }
        g.adjacency = NatMat::from_triples(9, 9, es);
        auto v = validate(g);
        REQUIRE(v);
        CHECK(v->clause == "box outgoing labels not contiguous");
        CHECK(v->node == 3);
    }

    SUBCASE("cycle") {
        auto es = g.adjacency.entries();
        es.push_back({0, 7, 1});  // wire 7 feeds back into wire 0
        g.adjacency = NatMat::from_triples(9, 9, es);
        auto v = validate(g);
        REQUIRE(v);
        CHECK(v->clause == "matrix not acyclic");
    }

    SUBCASE("wire-wire edge") {
        auto es = g.adjacency.entries();
        es.push_back({8, 7, 1});
        g.adjacency = NatMat::from_triples(9, 9, es);
        auto v = validate(g);
        REQUIRE(v);
        CHECK(v->clause == "edge endpoints not wire-box bipartite");
    }

    SUBCASE("box in the interface") {
        g.left_order = Perm(std::vector<NodeId>{2, 1, 0, 3, 4, 5, 6, 7, 8});
        auto v = validate(g);
        REQUIRE(v);
        CHECK(v->clause == "interface node not wire-labeled");
        CHECK(v->node == 2);
    }

    SUBCASE("interface conditions on wires") {
        // Swapping a mid wire into the left interface breaks both ends.
        g.left_order = Perm(std::vector<NodeId>{0, 4, 2, 3, 1, 5, 6, 7, 8});
        auto v = validate(g);
        REQUIRE(v);
        CHECK(v->clause == "wire with no incoming edge not in left interface");
        CHECK(v->node == 1);
    }
}

TEST_CASE("identity diagram") {
    Har id1 = Har::identity(1);
    CHECK(id1.node_count() == 1);
    CHECK(id1.adjacency.nnz() == 0);
    CHECK(id1.left_order[0] == 0);
    CHECK(id1.right_order[0] == 0);

    CHECK(iso_eq(compose(Har::identity(3), Har::identity(3)), Har::identity(3)));
    CHECK(Har::identity(0).node_count() == 0);
}

TEST_CASE("symmetry diagram") {
    Har s = Har::symmetry(1, 1);
    CHECK(s.node_count() == 2);
    CHECK(s.right_order.map() == std::vector<NodeId>{1, 0});
    CHECK(s.left_order.is_identity());

    CHECK(Har::symmetry(0, 4).right_order.is_identity());
    CHECK(iso_eq(compose(Har::symmetry(1, 1), Har::symmetry(1, 1)), Har::identity(2)));
    CHECK(iso_eq(compose(Har::symmetry(2, 3), Har::symmetry(3, 2)), Har::identity(5)));
}

TEST_CASE("singleton diagram") {
    SignaturePtr sig = bool_signature();

    Har nt = Har::singleton(sig, *sig->find("not"));
    CHECK(nt.node_count() == 3);
    CHECK(nt.adjacency.at(1, 0) == 1);
    CHECK(nt.adjacency.at(2, 1) == 1);
    CHECK(nt.adjacency.nnz() == 2);

    Har nd = Har::singleton(sig, *sig->find("and"));
    CHECK(nd.node_count() == 4);
    CHECK(nd.left_arity == 2);
    CHECK(nd.right_arity == 1);
    CHECK(nd.adjacency.at(2, 0) == 1);
    CHECK(nd.adjacency.at(2, 1) == 2);
    CHECK(nd.adjacency.at(3, 2) == 1);
    CHECK(nd.adjacency.nnz() == 3);
    CHECK_FALSE(validate(nd));

    auto degenerate = std::make_shared<Signature>();
    degenerate->add("unit", 0, 0);
    Har u = Har::singleton(degenerate, 0);
    CHECK(u.node_count() == 1);
    CHECK(u.adjacency.nnz() == 0);
    CHECK(u.left_arity == 0);
    CHECK(u.right_arity == 0);
    CHECK_FALSE(validate(u));

    CHECK_THROWS_AS(Har::singleton(sig, 99), std::invalid_argument);
}

TEST_CASE("boundary orders") {
    Har g = golden_har();
    CHECK(left_boundary_order(g) == g);  // already has identity left order

    Har r = right_boundary_order(g);
    CHECK(r.right_order.is_identity());
    CHECK_FALSE(validate(r));
    // Last two nodes exchanged in storage: the right interface sits last.
    CHECK(r.labels[7].is_wire());
    CHECK(r.adjacency.at(8, 6) == 1);  // gamma's output wire moved to slot 8
    CHECK(r.adjacency.at(7, 3) == 2);  // beta's second output now slot 7
    CHECK(check_permeq(g, r, g.right_order));

    std::mt19937_64 seed(3);
    TermGen gen(seed(), bool_signature());
    for (int trial = 0; trial < 30; ++trial) {
        Har h = random_har(gen, 5);
        Har scrambled = reorder_nodes(h, random_perm(gen.rng(), h.node_count()));
        Har lb = left_boundary_order(scrambled);
        Har rb = right_boundary_order(scrambled);
        CHECK(lb.left_order.is_identity());
        CHECK(rb.right_order.is_identity());
        CHECK_FALSE(validate(lb));
        CHECK_FALSE(validate(rb));
        CHECK(iso_eq(left_boundary_order(rb), scrambled));
        CHECK(iso_eq(right_boundary_order(lb), scrambled));
    }
}

TEST_CASE("tensor structure") {
    SignaturePtr sig = bool_signature();
    CHECK(iso_eq(tensor(Har::identity(1), Har::identity(1)), Har::identity(2)));

    Har nd = Har::singleton(sig, *sig->find("and"));
    Har t = tensor(nd, nd);
    CHECK(t.node_count() == 8);
    CHECK(t.left_arity == 4);
    CHECK(t.right_arity == 2);
    CHECK(t.adjacency.nnz() == 6);
    CHECK_FALSE(validate(t));

    // The monoidal unit.
    CHECK(tensor(Har::identity(0), nd) == nd);
    CHECK(iso_eq(tensor(nd, Har::identity(0)), nd));
}

TEST_CASE("compose chain of two generators") {
    SignaturePtr sig = bool_signature();
    Har nt = Har::singleton(sig, *sig->find("not"));
    Har c = compose(nt, nt);
    CHECK(c.node_count() == 5);
    CHECK(c.left_arity == 1);
    CHECK(c.right_arity == 1);
    REQUIRE(c.labels.size() == 5);
    CHECK(c.labels[0].is_wire());
    CHECK(c.labels[1].is_box());
    CHECK(c.labels[2].is_wire());
    CHECK(c.labels[3].is_box());
    CHECK(c.labels[4].is_wire());
    for (const auto& e : c.adjacency.entries()) {
        CHECK(e.value == 1);
        CHECK(e.row == e.col + 1);  // a single chain
    }
    CHECK_FALSE(validate(c));

    CHECK_THROWS_AS(compose(nt, Har::singleton(sig, *sig->find("and"))),
                    std::invalid_argument);
}

TEST_CASE("compose unit laws up to equivalence") {
    std::mt19937_64 seed(5);
    TermGen gen(seed(), bool_signature());
    for (int trial = 0; trial < 30; ++trial) {
        Har h = random_har(gen, 5);
        Har left_unit = compose(Har::identity(h.left_arity), h);
        Har right_unit = compose(h, Har::identity(h.right_arity));
        CHECK(iso_eq(left_unit, h));
        CHECK(iso_eq(right_unit, h));
        auto w = find_permeq_witness(right_unit, h);
        REQUIRE(w);
        CHECK(check_permeq(right_unit, h, *w));
    }
}

TEST_CASE("sizes add under tensor and compose") {
    std::mt19937_64 seed(6);
    TermGen gen(seed(), bool_signature());
    for (int trial = 0; trial < 30; ++trial) {
        Har f = random_har(gen, 4);
        Har g = random_har(gen, 4);
        Har t = tensor(f, g);
        CHECK(t.node_count() == f.node_count() + g.node_count());
        CHECK(t.adjacency.nnz() == f.adjacency.nnz() + g.adjacency.nnz());
        CHECK_FALSE(validate(t));
        CHECK(check_bounded_sparsity(t));

        Har g2 = eval_har(*gen.term_with_dom(f.right_arity, 4), bool_signature());
        Har c = compose(f, g2);
        CHECK(c.node_count() == f.node_count() + g2.node_count() - f.right_arity);
        CHECK(c.adjacency.nnz() == f.adjacency.nnz() + g2.adjacency.nnz());
        CHECK_FALSE(validate(c));
        CHECK(check_bounded_sparsity(c));
    }
}

TEST_CASE("tensor associativity up to equivalence") {
    std::mt19937_64 seed(7);
    TermGen gen(seed(), bool_signature());
    for (int trial = 0; trial < 20; ++trial) {
        Har f = random_har(gen, 3);
        Har g = random_har(gen, 3);
        Har h = random_har(gen, 3);
        CHECK(iso_eq(tensor(tensor(f, g), h), tensor(f, tensor(g, h))));
    }
}

TEST_CASE("composition associativity carries the explicit witness") {
    std::mt19937_64 seed(8);
    TermGen gen(seed(), bool_signature());
    for (int trial = 0; trial < 40; ++trial) {
        Har f = random_har(gen, 3);
        Har g = eval_har(*gen.term_with_dom(f.right_arity, 3), bool_signature());
        Har h = eval_har(*gen.term_with_dom(g.right_arity, 3), bool_signature());

        Har nested_left = compose(compose(f, g), h);
        Har nested_right = compose(f, compose(g, h));

        Perm witness = direct_sum(
            direct_sum(Perm::identity(f.node_count() - f.right_arity),
                       right_boundary_order(g).left_order),
            Perm::identity(h.node_count() - h.left_arity));
        CHECK(check_permeq(nested_left, nested_right, witness));
    }
}

TEST_CASE("check_permeq is an equivalence with matrix-style composition") {
    std::mt19937_64 seed(9);
    TermGen gen(seed(), bool_signature());
    for (int trial = 0; trial < 25; ++trial) {
        Har f = random_har(gen, 5);
        NodeId k = f.node_count();
        CHECK(check_permeq(f, f, Perm::identity(k)));

        Perm p = random_perm(gen.rng(), k);
        Har g = reorder_nodes(f, p);
        CHECK(check_permeq(f, g, p));
        CHECK(check_permeq(g, f, p.inverse()));

        Perm q = random_perm(gen.rng(), k);
        Har h = reorder_nodes(g, q);
        CHECK(check_permeq(g, h, q));
        CHECK(check_permeq(f, h, compose(p, q)));
    }
}

TEST_CASE("canonicalize returns identity diagrams verbatim") {
    CHECK(canonicalize(Har::identity(3)) == Har::identity(3));
    CHECK(canonicalize(Har::identity(0)) == Har::identity(0));
}

TEST_CASE("canonicalize is stable under node scrambles") {
    std::mt19937_64 seed(10);
    TermGen gen(seed(), bool_signature());
    for (int trial = 0; trial < 100; ++trial) {
        Har h = random_har(gen, 6);
        Har canon = canonicalize(h);
        CHECK_FALSE(validate(canon));
        CHECK(iso_eq(canon, h));

        Perm p = random_perm(gen.rng(), h.node_count());
        CHECK(canonicalize(reorder_nodes(h, p)) == canon);
    }
}

TEST_CASE("canonicalize handles components off the left interface") {
    // A generator with no inputs: its component is only reachable from the
    // right interface.
    auto sig = std::make_shared<Signature>();
    sig->add("one", 0, 1);
    sig->add("not", 1, 1);
    Har source = Har::singleton(sig, 0);
    Har inverter = Har::singleton(sig, 1);
    Har h = tensor(compose(source, inverter), inverter);
    CHECK_FALSE(validate(h));
    CHECK(iso_eq(canonicalize(h), h));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Perm p = random_perm(rng, h.node_count());
        CHECK(canonicalize(reorder_nodes(h, p)) == canonicalize(h));
    }
}

TEST_CASE("golden example canonicalizes with a recoverable witness") {
    Har g = golden_har();
    Har canon = canonicalize(g);
    CHECK(iso_eq(canon, g));
    auto w = find_permeq_witness(g, canon);
    REQUIRE(w);
    CHECK(check_permeq(g, canon, *w));
}

TEST_CASE("iso_eq distinguishes different diagrams") {
    SignaturePtr sig = bool_signature();
    Har nt = Har::singleton(sig, *sig->find("not"));
    CHECK(iso_eq(nt, nt));
    CHECK_FALSE(iso_eq(nt, Har::singleton(sig, *sig->find("and"))));
    CHECK_FALSE(iso_eq(compose(nt, nt), tensor(nt, nt)));
    // Same type and node count, different wiring.
    CHECK_FALSE(iso_eq(Har::symmetry(1, 1), Har::identity(2)));
}

TEST_CASE("bounded sparsity holds for built diagrams") {
    Har g = golden_har();
    CHECK(check_bounded_sparsity(g));

    std::mt19937_64 seed(12);
    TermGen gen(seed(), bool_signature());
    for (int trial = 0; trial < 30; ++trial) {
        CHECK(check_bounded_sparsity(random_har(gen, 6)));
    }
}

TEST_CASE("signature merging") {
    SignaturePtr sig = bool_signature();
    Har nt = Har::singleton(sig, *sig->find("not"));
    Har t = tensor(nt, Har::identity(2));  // null signature on the right
    CHECK(t.sig == sig);

    auto other = std::make_shared<Signature>();
    other->add("alpha", 1, 1);
    CHECK_THROWS_AS(tensor(nt, Har::singleton(other, 0)), std::invalid_argument);
}
