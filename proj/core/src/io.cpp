#include "har/io.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace har {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw std::runtime_error("malformed file: " + what);
}

std::string next_token(std::istream& in, const char* what) {
    std::string t;
    if (!(in >> t)) {
        bad(std::string("expected ") + what);
    }
    return t;
}

void expect_keyword(std::istream& in, const char* kw) {
    std::string t = next_token(in, kw);
    if (t != kw) {
        bad(std::string("expected '") + kw + "', found '" + t + "'");
    }
}

std::uint64_t next_number(std::istream& in, const char* what, std::uint64_t max) {
    std::string t = next_token(in, what);
    std::uint64_t v = 0;
    for (char c : t) {
        if (c < '0' || c > '9') {
            bad(std::string("expected a number for ") + what);
        }
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
        if (v > max) {
            bad(std::string(what) + " out of range");
        }
    }
    if (t.empty()) {
        bad(std::string("expected a number for ") + what);
    }
    return v;
}

Nat next_nat(std::istream& in, const char* what) {
    return static_cast<Nat>(next_number(in, what, std::numeric_limits<Nat>::max()));
}

void write_signature_block(std::ostream& out, const SignaturePtr& sig) {
    out << "sig " << (sig ? sig->size() : 0) << "\n";
    if (sig) {
        for (const OpSig& op : *sig) {
            out << op.name << " " << op.arity << " " << op.coarity << "\n";
        }
    }
}

SignaturePtr read_signature_block(std::istream& in) {
    expect_keyword(in, "sig");
    Nat count = next_nat(in, "signature size");
    if (count == 0) {
        return nullptr;
    }
    auto sig = std::make_shared<Signature>();
    for (Nat i = 0; i < count; ++i) {
        std::string name = next_token(in, "operation name");
        Nat arity = next_nat(in, "arity");
        Nat coarity = next_nat(in, "coarity");
        sig->add(std::move(name), arity, coarity);
    }
    return sig;
}

}  // namespace

void write_har(std::ostream& out, const Har& h) {
    out << "har-v1\n";
    write_signature_block(out, h.sig);
    out << "type " << h.left_arity << " " << h.right_arity << "\n";
    out << "nodes " << h.node_count() << "\n";
    out << "adj " << h.adjacency.nnz() << "\n";
    for (NodeId i = 0; i < h.node_count(); ++i) {
        auto cs = h.adjacency.row_cols(i);
        auto vs = h.adjacency.row_values(i);
        for (std::size_t t = 0; t < cs.size(); ++t) {
            out << i << " " << cs[t] << " " << vs[t] << "\n";
        }
    }
    out << "left";
    for (NodeId v : h.left_order.map()) {
        out << " " << v;
    }
    out << "\nright";
    for (NodeId v : h.right_order.map()) {
        out << " " << v;
    }
    out << "\nlabels";
    for (const NodeLabel& l : h.labels) {
        if (l.is_wire()) {
            out << " w";
        } else {
            out << " b:" << (*h.sig)[l.op].name;
        }
    }
    out << "\n";
}

Har read_har(std::istream& in) {
    expect_keyword(in, "har-v1");
    SignaturePtr sig = read_signature_block(in);

    expect_keyword(in, "type");
    Nat a = next_nat(in, "left boundary size");
    Nat b = next_nat(in, "right boundary size");
    expect_keyword(in, "nodes");
    NodeId k = next_nat(in, "node count");
    expect_keyword(in, "adj");
    NodeId nnz = next_nat(in, "entry count");

    std::vector<NatMat::Entry> es;
    es.reserve(nnz);
    for (NodeId t = 0; t < nnz; ++t) {
        NodeId row = next_nat(in, "entry row");
        NodeId col = next_nat(in, "entry column");
        Nat value = next_nat(in, "entry label");
        if (row >= k || col >= k) {
            bad("adjacency index out of range");
        }
        if (value == 0) {
            bad("explicit zero entry");
        }
        es.push_back({row, col, value});
    }

    auto read_perm = [&](const char* kw) {
        expect_keyword(in, kw);
        std::vector<NodeId> m(k);
        for (NodeId i = 0; i < k; ++i) {
            m[i] = next_nat(in, "boundary order index");
        }
        try {
            return Perm(std::move(m));
        } catch (const std::invalid_argument&) {
            bad(std::string(kw) + " order is not a permutation");
        }
    };
    Perm left = read_perm("left");
    Perm right = read_perm("right");

    expect_keyword(in, "labels");
    std::vector<NodeLabel> labels(k);
    for (NodeId i = 0; i < k; ++i) {
        std::string t = next_token(in, "node label");
        if (t == "w") {
            labels[i] = NodeLabel::wire();
        } else if (t.size() > 2 && t[0] == 'b' && t[1] == ':') {
            if (!sig) {
                bad("box label without a signature");
            }
            auto op = sig->find(std::string_view(t).substr(2));
            if (!op) {
                bad("box label '" + t.substr(2) + "' not in signature");
            }
            labels[i] = NodeLabel::box(*op);
        } else {
            bad("unrecognized node label '" + t + "'");
        }
    }

    if (a > k || b > k) {
        bad("boundary sizes exceed node count");
    }
    return Har::make(a, b, NatMat::from_triples(k, k, es), std::move(left),
                     std::move(right), std::move(labels), std::move(sig));
}

void write_hypergraph(std::ostream& out, const MaHypergraph& h) {
    out << "hyp-v1\n";
    write_signature_block(out, h.sig);
    out << "nodes " << h.node_count << "\n";
    out << "edges " << h.edges.size() << "\n";
    for (const Hyperedge& e : h.edges) {
        out << (*h.sig)[e.op].name << " " << e.sources.size();
        for (NodeId v : e.sources) {
            out << " " << v;
        }
        out << " " << e.targets.size();
        for (NodeId v : e.targets) {
            out << " " << v;
        }
        out << "\n";
    }
    out << "left " << h.left.size();
    for (NodeId v : h.left) {
        out << " " << v;
    }
    out << "\nright " << h.right.size();
    for (NodeId v : h.right) {
        out << " " << v;
    }
    out << "\n";
}

MaHypergraph read_hypergraph(std::istream& in) {
    expect_keyword(in, "hyp-v1");
    MaHypergraph h;
    h.sig = read_signature_block(in);
    expect_keyword(in, "nodes");
    h.node_count = next_nat(in, "node count");
    expect_keyword(in, "edges");
    NodeId edges = next_nat(in, "edge count");
    for (NodeId e = 0; e < edges; ++e) {
        std::string name = next_token(in, "hyperedge label");
        if (!h.sig) {
            bad("hyperedge without a signature");
        }
        auto op = h.sig->find(name);
        if (!op) {
            bad("hyperedge label '" + name + "' not in signature");
        }
        Hyperedge edge;
        edge.op = *op;
        NodeId ns = next_nat(in, "source count");
        for (NodeId t = 0; t < ns; ++t) {
            edge.sources.push_back(next_nat(in, "source node"));
        }
        NodeId nt = next_nat(in, "target count");
        for (NodeId t = 0; t < nt; ++t) {
            edge.targets.push_back(next_nat(in, "target node"));
        }
        h.edges.push_back(std::move(edge));
    }
    expect_keyword(in, "left");
    NodeId nl = next_nat(in, "left size");
    for (NodeId t = 0; t < nl; ++t) {
        h.left.push_back(next_nat(in, "left node"));
    }
    expect_keyword(in, "right");
    NodeId nr = next_nat(in, "right size");
    for (NodeId t = 0; t < nr; ++t) {
        h.right.push_back(next_nat(in, "right node"));
    }
    return h;
}

void write_signature(std::ostream& out, const Signature& sig) {
    for (const OpSig& op : sig) {
        out << op.name << " " << op.arity << " " << op.coarity << "\n";
    }
}

SignaturePtr read_signature(std::istream& in) {
    auto sig = std::make_shared<Signature>();
    std::string name;
    while (in >> name) {
        Nat arity = next_nat(in, "arity");
        Nat coarity = next_nat(in, "coarity");
        sig->add(name, arity, coarity);
    }
    return sig;
}

std::string har_to_string(const Har& h) {
    std::ostringstream out;
    write_har(out, h);
    return out.str();
}

Har har_from_string(const std::string& text) {
    std::istringstream in(text);
    return read_har(in);
}

}  // namespace har
