#include "har/term.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace har {

TermPtr Term::gen(std::string name) {
    return TermPtr(new Term(Kind::Gen, std::move(name), 0, 0, nullptr, nullptr));
}

TermPtr Term::id(Nat n) {
    return TermPtr(new Term(Kind::Id, {}, n, 0, nullptr, nullptr));
}

TermPtr Term::sym(Nat a, Nat b) {
    return TermPtr(new Term(Kind::Sym, {}, a, b, nullptr, nullptr));
}

TermPtr Term::seq(TermPtr lhs, TermPtr rhs) {
    return TermPtr(new Term(Kind::Seq, {}, 0, 0, std::move(lhs), std::move(rhs)));
}

TermPtr Term::par(TermPtr lhs, TermPtr rhs) {
    return TermPtr(new Term(Kind::Par, {}, 0, 0, std::move(lhs), std::move(rhs)));
}

bool Term::operator==(const Term& other) const {
    if (kind_ != other.kind_) {
        return false;
    }
    switch (kind_) {
        case Kind::Gen:
            return name_ == other.name_;
        case Kind::Id:
            return a_ == other.a_;
        case Kind::Sym:
            return a_ == other.a_ && b_ == other.b_;
        case Kind::Seq:
        case Kind::Par:
            return *lhs_ == *other.lhs_ && *rhs_ == *other.rhs_;
    }
    return false;
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at offset " + std::to_string(pos), pos);
    }

    Nat parse_nat() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
            fail("expected a number");
        }
        unsigned long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<unsigned long long>(text[pos] - '0');
            if (v > ~Nat{0}) {
                fail("number out of range");
            }
            ++pos;
        }
        return static_cast<Nat>(v);
    }

    std::string parse_ident() {
        skip_ws();
        std::size_t start = pos;
        auto head = [](char c) {
            return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
        };
        auto tail = [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
        };
        if (pos >= text.size() || !head(text[pos])) {
            fail("expected an identifier");
        }
        ++pos;
        while (pos < text.size() && tail(text[pos])) {
            ++pos;
        }
        return std::string(text.substr(start, pos - start));
    }

    TermPtr parse_atom() {
        skip_ws();
        if (pos >= text.size()) {
            fail("unexpected end of input");
        }
        if (text[pos] == '(') {
            ++pos;
            TermPtr t = parse_seq();
            skip_ws();
            if (pos >= text.size() || text[pos] != ')') {
                fail("expected ')'");
            }
            ++pos;
            return t;
        }
        std::string name = parse_ident();
        if (name == "id") {
            return Term::id(parse_nat());
        }
        if (name == "sym") {
            Nat a = parse_nat();
            Nat b = parse_nat();
            return Term::sym(a, b);
        }
        return Term::gen(std::move(name));
    }

    TermPtr parse_par() {
        TermPtr t = parse_atom();
        while (peek() == '*') {
            ++pos;
            t = Term::par(std::move(t), parse_atom());
        }
        return t;
    }

    TermPtr parse_seq() {
        TermPtr t = parse_par();
        while (peek() == ';') {
            ++pos;
            t = Term::seq(std::move(t), parse_par());
        }
        return t;
    }
};

void print_rec(const Term& t, int parent_prec, bool right_child, std::string& out) {
    // precedence: Seq = 1, Par = 2, atoms = 3
    switch (t.kind()) {
        case Term::Kind::Gen:
            out += t.name();
            return;
        case Term::Kind::Id:
            out += "id " + std::to_string(t.a());
            return;
        case Term::Kind::Sym:
            out += "sym " + std::to_string(t.a()) + " " + std::to_string(t.b());
            return;
        case Term::Kind::Seq: {
            bool parens = parent_prec > 1 || (parent_prec == 1 && right_child);
            if (parens) {
                out += "(";
            }
            print_rec(*t.lhs(), 1, false, out);
            out += " ; ";
            print_rec(*t.rhs(), 1, true, out);
            if (parens) {
                out += ")";
            }
            return;
        }
        case Term::Kind::Par: {
            bool parens = parent_prec > 2 || (parent_prec == 2 && right_child);
            if (parens) {
                out += "(";
            }
            print_rec(*t.lhs(), 2, false, out);
            out += " * ";
            print_rec(*t.rhs(), 2, true, out);
            if (parens) {
                out += ")";
            }
            return;
        }
    }
}

}  // namespace

TermPtr parse_term(std::string_view text) {
    Parser p{text};
    TermPtr t = p.parse_seq();
    if (!p.at_end()) {
        p.fail("trailing input");
    }
    return t;
}

std::string print_term(const Term& t) {
    std::string out;
    print_rec(t, 0, false, out);
    return out;
}

std::pair<Nat, Nat> typecheck(const Term& t, const Signature& sig) {
    switch (t.kind()) {
        case Term::Kind::Gen: {
            auto op = sig.find(t.name());
            if (!op) {
                throw TypeError("unknown generator '" + t.name() + "'");
            }
            return {sig[*op].arity, sig[*op].coarity};
        }
        case Term::Kind::Id:
            return {t.a(), t.a()};
        case Term::Kind::Sym:
            return {t.a() + t.b(), t.a() + t.b()};
        case Term::Kind::Seq: {
            auto [d1, c1] = typecheck(*t.lhs(), sig);
            auto [d2, c2] = typecheck(*t.rhs(), sig);
            if (c1 != d2) {
                throw TypeError("composition boundary mismatch: " + std::to_string(c1) +
                                " vs " + std::to_string(d2));
            }
            return {d1, c2};
        }
        case Term::Kind::Par: {
            auto [d1, c1] = typecheck(*t.lhs(), sig);
            auto [d2, c2] = typecheck(*t.rhs(), sig);
            return {d1 + d2, c1 + c2};
        }
    }
    throw TypeError("malformed term");
}

namespace {

Har eval_rec(const Term& t, const SignaturePtr& sig) {
    switch (t.kind()) {
        case Term::Kind::Gen:
            return Har::singleton(sig, *sig->find(t.name()));
        case Term::Kind::Id:
            return Har::identity(t.a(), sig);
        case Term::Kind::Sym:
            return Har::symmetry(t.a(), t.b(), sig);
        case Term::Kind::Seq:
            return compose(eval_rec(*t.lhs(), sig), eval_rec(*t.rhs(), sig));
        case Term::Kind::Par:
            return tensor(eval_rec(*t.lhs(), sig), eval_rec(*t.rhs(), sig));
    }
    throw TypeError("malformed term");
}

}  // namespace

Har eval_har(const Term& t, SignaturePtr sig) {
    if (!sig) {
        throw TypeError("eval_har: null signature");
    }
    typecheck(t, *sig);
    return eval_rec(t, sig);
}

TermPtr perm_to_term(const Perm& p) {
    NodeId k = p.size();
    // Bubble sort the index sequence; the recorded swaps, replayed in
    // reverse, rebuild p as a composite of adjacent transpositions.
    std::vector<NodeId> a(p.map());
    std::vector<NodeId> swaps;
    bool moved = true;
    while (moved) {
        moved = false;
        for (NodeId i = 0; i + 1 < k; ++i) {
            if (a[i] > a[i + 1]) {
                std::swap(a[i], a[i + 1]);
                swaps.push_back(i);
                moved = true;
            }
        }
    }
    if (swaps.empty()) {
        return Term::id(k);
    }
    auto layer = [k](NodeId i) {
        TermPtr t = i > 0 ? Term::par(Term::id(i), Term::sym(1, 1)) : Term::sym(1, 1);
        if (k - i - 2 > 0) {
            t = Term::par(std::move(t), Term::id(k - i - 2));
        }
        return t;
    };
    TermPtr term;
    for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
        TermPtr l = layer(*it);
        term = term ? Term::seq(std::move(term), std::move(l)) : std::move(l);
    }
    return term;
}

TermPtr decompose(const Har& h) {
    if (auto v = validate(h)) {
        throw std::invalid_argument("decompose: invalid input: " + v->clause);
    }
    NodeId k = h.node_count();
    NatMat outgoing = h.adjacency.transpose();
    Perm order = canonical_order(h);

    std::vector<NodeId> frontier;
    frontier.reserve(k);
    for (Nat i = 0; i < h.left_arity; ++i) {
        frontier.push_back(h.left_order[i]);
    }

    auto wires_to_perm = [&](const std::vector<NodeId>& target) {
        std::vector<NodeId> posmap(k, k);
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            posmap[frontier[i]] = static_cast<NodeId>(i);
        }
        std::vector<NodeId> p(target.size());
        for (std::size_t j = 0; j < target.size(); ++j) {
            p[j] = posmap[target[j]];
        }
        return Perm(std::move(p));
    };

    TermPtr term;
    auto append = [&term](TermPtr t) {
        term = term ? Term::seq(std::move(term), std::move(t)) : std::move(t);
    };

    for (NodeId t = 0; t < k; ++t) {
        NodeId box = order[t];
        if (!h.labels[box].is_box()) {
            continue;
        }
        const OpSig& op = (*h.sig)[h.labels[box].op];

        std::vector<NodeId> inputs(op.arity);
        auto in_cols = h.adjacency.row_cols(box);
        auto in_vals = h.adjacency.row_values(box);
        for (std::size_t u = 0; u < in_cols.size(); ++u) {
            inputs[in_vals[u] - 1] = in_cols[u];
        }

        // Route the box inputs to the front, keep the rest in place.
        std::vector<NodeId> target = inputs;
        std::vector<bool> is_input(k, false);
        for (NodeId w : inputs) {
            is_input[w] = true;
        }
        for (NodeId w : frontier) {
            if (!is_input[w]) {
                target.push_back(w);
            }
        }
        append(perm_to_term(wires_to_perm(target)));

        Nat rest = static_cast<Nat>(frontier.size() - op.arity);
        TermPtr gen_layer = Term::gen(op.name);
        if (rest > 0) {
            gen_layer = Term::par(std::move(gen_layer), Term::id(rest));
        }
        append(std::move(gen_layer));

        std::vector<NodeId> outputs(op.coarity);
        auto out_cols = outgoing.row_cols(box);
        auto out_vals = outgoing.row_values(box);
        for (std::size_t u = 0; u < out_cols.size(); ++u) {
            outputs[out_vals[u] - 1] = out_cols[u];
        }
        std::vector<NodeId> next = std::move(outputs);
        for (std::size_t i = op.arity; i < target.size(); ++i) {
            next.push_back(target[i]);
        }
        frontier = std::move(next);
    }

    std::vector<NodeId> final_target;
    final_target.reserve(h.right_arity);
    for (Nat j = 0; j < h.right_arity; ++j) {
        final_target.push_back(h.right_order[k - h.right_arity + j]);
    }
    append(perm_to_term(wires_to_perm(final_target)));
    return term;
}

}  // namespace har
