// Shared test fixtures: the worked 9-node example with its hypergraph and
// term forms, seeded random generators for terms, diagrams and node
// scrambles, and term evaluation through the hypergraph oracle.
#ifndef HAR_TESTS_SUPPORT_HPP
#define HAR_TESTS_SUPPORT_HPP

#include "har/har.hpp"
#include "har/hypergraph.hpp"
#include "har/term.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace har::testing {

inline SignaturePtr example_signature() {
    static const SignaturePtr sig = [] {
        auto s = std::make_shared<Signature>();
        s->add("alpha", 1, 1);
        s->add("beta", 1, 2);
        s->add("gamma", 2, 1);
        return s;
    }();
    return sig;
}

// The worked 2 -> 2 example: alpha and beta side by side, beta's first
// output and alpha's output feeding gamma, outputs crossed.
inline Har golden_har() {
    SignaturePtr sig = example_signature();
    std::vector<NatMat::Entry> es = {
        {2, 0, 1}, {3, 1, 1}, {4, 2, 1}, {5, 3, 1},
        {6, 4, 2}, {6, 5, 1}, {7, 6, 1}, {8, 3, 2},
    };
    std::vector<NodeLabel> labels = {
        NodeLabel::wire(), NodeLabel::wire(), NodeLabel::box(*sig->find("alpha")),
        NodeLabel::box(*sig->find("beta")), NodeLabel::wire(), NodeLabel::wire(),
        NodeLabel::box(*sig->find("gamma")), NodeLabel::wire(), NodeLabel::wire(),
    };
    Perm right(std::vector<NodeId>{0, 1, 2, 3, 4, 5, 6, 8, 7});
    return Har::make(2, 2, NatMat::from_triples(9, 9, es), Perm::identity(9),
                     std::move(right), std::move(labels), sig);
}

// The same diagram as a hypergraph with interfaces.
inline MaHypergraph golden_hypergraph() {
    SignaturePtr sig = example_signature();
    MaHypergraph h;
    h.sig = sig;
    h.node_count = 6;
    h.edges = {
        {*sig->find("alpha"), {0}, {2}},
        {*sig->find("beta"), {1}, {3, 5}},
        {*sig->find("gamma"), {3, 2}, {4}},
    };
    h.left = {0, 1};
    h.right = {5, 4};
    return h;
}

inline const char* golden_term_text() {
    return "(alpha * beta) ; (sym 1 1 * id 1) ; (gamma * id 1) ; sym 1 1";
}

inline Perm random_perm(std::mt19937_64& rng, NodeId n) {
    std::vector<NodeId> m(n);
    std::iota(m.begin(), m.end(), NodeId{0});
    std::shuffle(m.begin(), m.end(), rng);
    return Perm(std::move(m));
}

// Signature-aware random terms, biased toward embedding generators so the
// budget is actually spent; always well-typed.
class TermGen {
public:
    TermGen(std::uint64_t seed, SignaturePtr sig) : rng_(seed), sig_(std::move(sig)) {}

    TermPtr term(int gen_budget) {
        int budget = gen_budget;
        return any_term(budget, 0);
    }

    TermPtr term_with_dom(Nat dom, int gen_budget) {
        int budget = gen_budget;
        return dom_term(dom, budget, 0);
    }

    std::mt19937_64& rng() { return rng_; }

private:
    static constexpr int kMaxDepth = 8;

    int roll(int bound) {
        return static_cast<int>(std::uniform_int_distribution<int>(0, bound - 1)(rng_));
    }

    Nat cod_of(const Term& t) { return typecheck(t, *sig_).second; }

    TermPtr leaf() {
        if (roll(3) == 0) {
            return Term::sym(static_cast<Nat>(1 + roll(2)), static_cast<Nat>(1 + roll(2)));
        }
        return Term::id(static_cast<Nat>(roll(3)));
    }

    TermPtr any_term(int& budget, int depth) {
        if (depth >= kMaxDepth || (budget <= 0 && roll(2) == 0)) {
            return leaf();
        }
        switch (roll(6)) {
            case 0:
            case 1:
                if (budget > 0) {
                    --budget;
                    return Term::gen((*sig_)[static_cast<OpId>(roll(sig_->size()))].name);
                }
                return leaf();
            case 2:
            case 3: {
                TermPtr lhs = any_term(budget, depth + 1);
                TermPtr rhs = dom_term(cod_of(*lhs), budget, depth + 1);
                return Term::seq(std::move(lhs), std::move(rhs));
            }
            default: {
                TermPtr lhs = any_term(budget, depth + 1);
                TermPtr rhs = any_term(budget, depth + 1);
                return Term::par(std::move(lhs), std::move(rhs));
            }
        }
    }

    TermPtr dom_term(Nat dom, int& budget, int depth) {
        if (depth >= kMaxDepth) {
            return Term::id(dom);
        }
        switch (roll(6)) {
            case 0: {
                // id a * g * id b with arity(g) <= dom
                if (budget > 0) {
                    std::vector<OpId> fits;
                    for (OpId op = 0; op < sig_->size(); ++op) {
                        if ((*sig_)[op].arity <= dom) {
                            fits.push_back(op);
                        }
                    }
                    if (!fits.empty()) {
                        OpId op = fits[static_cast<std::size_t>(roll(static_cast<int>(fits.size())))];
                        --budget;
                        Nat slack = dom - (*sig_)[op].arity;
                        Nat lead = slack > 0 ? static_cast<Nat>(roll(static_cast<int>(slack) + 1)) : 0;
                        TermPtr t = Term::gen((*sig_)[op].name);
                        if (lead > 0) {
                            t = Term::par(Term::id(lead), std::move(t));
                        }
                        if (slack - lead > 0) {
                            t = Term::par(std::move(t), Term::id(slack - lead));
                        }
                        return t;
                    }
                }
                return Term::id(dom);
            }
            case 1:
                if (dom >= 2) {
                    Nat a = static_cast<Nat>(1 + roll(static_cast<int>(dom) - 1));
                    return Term::sym(a, dom - a);
                }
                return Term::id(dom);
            case 2: {
                TermPtr lhs = dom_term(dom, budget, depth + 1);
                TermPtr rhs = dom_term(cod_of(*lhs), budget, depth + 1);
                return Term::seq(std::move(lhs), std::move(rhs));
            }
            case 3:
                if (dom >= 1) {
                    Nat split = static_cast<Nat>(roll(static_cast<int>(dom) + 1));
                    return Term::par(dom_term(split, budget, depth + 1),
                                     dom_term(dom - split, budget, depth + 1));
                }
                return Term::id(dom);
            default:
                return dom_term(dom, budget, depth + 1);
        }
    }

    std::mt19937_64 rng_;
    SignaturePtr sig_;
};

// Term evaluation through the hypergraph oracle: generators become single
// hyperedges, Seq glues by pushout, Par is disjoint union.
inline MaHypergraph eval_hyp(const Term& t, const SignaturePtr& sig) {
    switch (t.kind()) {
        case Term::Kind::Gen: {
            const OpSig& op = (*sig)[*sig->find(t.name())];
            MaHypergraph h;
            h.sig = sig;
            h.node_count = op.arity + op.coarity;
            Hyperedge e;
            e.op = *sig->find(t.name());
            for (Nat i = 0; i < op.arity; ++i) {
                e.sources.push_back(i);
                h.left.push_back(i);
            }
            for (Nat j = 0; j < op.coarity; ++j) {
                e.targets.push_back(op.arity + j);
                h.right.push_back(op.arity + j);
            }
            h.edges.push_back(std::move(e));
            return h;
        }
        case Term::Kind::Id: {
            MaHypergraph h;
            h.sig = sig;
            h.node_count = t.a();
            for (Nat i = 0; i < t.a(); ++i) {
                h.left.push_back(i);
                h.right.push_back(i);
            }
            return h;
        }
        case Term::Kind::Sym: {
            MaHypergraph h;
            h.sig = sig;
            h.node_count = t.a() + t.b();
            for (Nat i = 0; i < t.a() + t.b(); ++i) {
                h.left.push_back(i);
            }
            for (Nat j = 0; j < t.b(); ++j) {
                h.right.push_back(t.a() + j);
            }
            for (Nat i = 0; i < t.a(); ++i) {
                h.right.push_back(i);
            }
            return h;
        }
        case Term::Kind::Seq:
            return compose_pushout(eval_hyp(*t.lhs(), sig), eval_hyp(*t.rhs(), sig));
        case Term::Kind::Par:
            return tensor_disjoint(eval_hyp(*t.lhs(), sig), eval_hyp(*t.rhs(), sig));
    }
    throw std::logic_error("malformed term");
}

}  // namespace har::testing

#endif  // HAR_TESTS_SUPPORT_HPP
