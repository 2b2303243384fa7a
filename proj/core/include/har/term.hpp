#ifndef HAR_TERM_HPP
#define HAR_TERM_HPP

#include "har/har.hpp"
#include "har/signature.hpp"
#include "har/types.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace har {

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Syntax tree of the free PROP over a signature.  Concrete grammar:
//
//   term := atom | term ";" term | term "*" term
//   atom := IDENT | "id" NAT | "sym" NAT NAT | "(" term ")"
//
// ";" is sequential composition in diagrammatic order and binds looser than
// "*"; both associate to the left.
class Term {
public:
    enum class Kind { Gen, Id, Sym, Seq, Par };

    static TermPtr gen(std::string name);
    static TermPtr id(Nat n);
    static TermPtr sym(Nat a, Nat b);
    static TermPtr seq(TermPtr lhs, TermPtr rhs);
    static TermPtr par(TermPtr lhs, TermPtr rhs);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }  // Gen
    Nat a() const { return a_; }                       // Id / Sym
    Nat b() const { return b_; }                       // Sym
    const TermPtr& lhs() const { return lhs_; }        // Seq / Par
    const TermPtr& rhs() const { return rhs_; }

    bool operator==(const Term& other) const;

private:
    Term(Kind kind, std::string name, Nat a, Nat b, TermPtr lhs, TermPtr rhs)
        : kind_(kind), name_(std::move(name)), a_(a), b_(b), lhs_(std::move(lhs)),
          rhs_(std::move(rhs)) {}

    Kind kind_;
    std::string name_;
    Nat a_ = 0;
    Nat b_ = 0;
    TermPtr lhs_;
    TermPtr rhs_;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position(position) {}
    std::size_t position;
};

struct TypeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

TermPtr parse_term(std::string_view text);  // throws ParseError
std::string print_term(const Term& t);      // parse_term(print_term(t)) == t

// Domain and codomain under the typing rules; throws TypeError on unknown
// generators or a Seq boundary mismatch.
std::pair<Nat, Nat> typecheck(const Term& t, const Signature& sig);

// Structural evaluation into the adjacency representation: generators to
// singletons, Seq to compose, Par to tensor.
Har eval_har(const Term& t, SignaturePtr sig);

// Layered normal form evaluating back to h up to permutation equivalence:
// alternating wiring layers and single-generator layers, generators in
// canonical traversal order.
TermPtr decompose(const Har& h);

// Adjacent-transposition realization of p: a Seq/Par composite of sym 1 1
// and id evaluating to Har::permutation(p).
TermPtr perm_to_term(const Perm& p);

}  // namespace har

#endif  // HAR_TERM_HPP
