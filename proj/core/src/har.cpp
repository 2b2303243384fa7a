#include "har/har.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <utility>

namespace har {

namespace {

bool same_signature(const SignaturePtr& a, const SignaturePtr& b) {
    if (a == b) {
        return true;
    }
    if (!a || !b) {
        return false;
    }
    return *a == *b;
}

bool labels_equal(const Har& f, const Har& g) {
    if (f.labels.size() != g.labels.size()) {
        return false;
    }
    if (same_signature(f.sig, g.sig)) {
        return f.labels == g.labels;
    }
    for (NodeId i = 0; i < f.node_count(); ++i) {
        const NodeLabel& a = f.labels[i];
        const NodeLabel& b = g.labels[i];
        if (a.is_wire() != b.is_wire()) {
            return false;
        }
        if (a.is_box()) {
            if (!f.sig || !g.sig || !((*f.sig)[a.op] == (*g.sig)[b.op])) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

SignaturePtr merge_signatures(const Har& f, const Har& g) {
    if (!f.sig) {
        return g.sig;
    }
    if (!g.sig) {
        return f.sig;
    }
    if (f.sig == g.sig || *f.sig == *g.sig) {
        return f.sig;
    }
    throw std::invalid_argument("signature mismatch between operands");
}

Har Har::make(Nat left_arity, Nat right_arity, NatMat adjacency, Perm left_order,
              Perm right_order, std::vector<NodeLabel> labels, SignaturePtr sig) {
    NodeId k = static_cast<NodeId>(labels.size());
    if (adjacency.rows() != k || adjacency.cols() != k || left_order.size() != k ||
        right_order.size() != k || left_arity > k || right_arity > k) {
        throw std::invalid_argument("Har::make: component sizes disagree");
    }
    Har h;
    h.left_arity = left_arity;
    h.right_arity = right_arity;
    h.adjacency = std::move(adjacency);
    h.left_order = std::move(left_order);
    h.right_order = std::move(right_order);
    h.labels = std::move(labels);
    h.sig = std::move(sig);
    return h;
}

bool Har::operator==(const Har& other) const {
    return left_arity == other.left_arity && right_arity == other.right_arity &&
           adjacency == other.adjacency && left_order == other.left_order &&
           right_order == other.right_order && labels_equal(*this, other);
}

Har Har::identity(Nat a, SignaturePtr sig) {
    Har h;
    h.left_arity = a;
    h.right_arity = a;
    h.adjacency = NatMat::zero(a, a);
    h.left_order = Perm::identity(a);
    h.right_order = Perm::identity(a);
    h.labels.assign(a, NodeLabel::wire());
    h.sig = std::move(sig);
    return h;
}

Har Har::symmetry(Nat a, Nat b, SignaturePtr sig) {
    Nat k = a + b;
    Har h;
    h.left_arity = k;
    h.right_arity = k;
    h.adjacency = NatMat::zero(k, k);
    h.left_order = Perm::identity(k);
    h.right_order = Perm::block_swap(a, b);
    h.labels.assign(k, NodeLabel::wire());
    h.sig = std::move(sig);
    return h;
}

Har Har::singleton(SignaturePtr sig, OpId op) {
    if (!sig || op >= sig->size()) {
        throw std::invalid_argument("Har::singleton: operation not in signature");
    }
    Nat a = (*sig)[op].arity;
    Nat b = (*sig)[op].coarity;
    NodeId k = a + b + 1;
    NodeId box = a;

    std::vector<NatMat::Entry> es;
    es.reserve(static_cast<std::size_t>(a) + b);
    for (Nat i = 0; i < a; ++i) {
        es.push_back({box, i, i + 1});  // input wire i feeds the box, port i+1
    }
    for (Nat j = 0; j < b; ++j) {
        es.push_back({box + 1 + j, box, j + 1});  // box feeds output wire j, port j+1
    }

    Har h;
    h.left_arity = a;
    h.right_arity = b;
    h.adjacency = NatMat::from_triples(k, k, es);
    h.left_order = Perm::identity(k);
    h.right_order = Perm::identity(k);
    h.labels.assign(k, NodeLabel::wire());
    h.labels[box] = NodeLabel::box(op);
    h.sig = std::move(sig);
    return h;
}

Har Har::permutation(const Perm& p, SignaturePtr sig) {
    NodeId k = p.size();
    Har h;
    h.left_arity = k;
    h.right_arity = k;
    h.adjacency = NatMat::zero(k, k);
    h.left_order = Perm::identity(k);
    h.right_order = p;
    h.labels.assign(k, NodeLabel::wire());
    h.sig = std::move(sig);
    return h;
}

std::optional<Violation> validate(const Har& h) {
    NodeId k = h.node_count();
    NodeId none = k;
    if (h.adjacency.rows() != k || h.adjacency.cols() != k || h.left_order.size() != k ||
        h.right_order.size() != k || h.left_arity > k || h.right_arity > k) {
        return Violation{"component sizes disagree", none};
    }
    for (NodeId i = 0; i < k; ++i) {
        if (h.labels[i].is_box() && (!h.sig || h.labels[i].op >= h.sig->size())) {
            return Violation{"box label not in signature", i};
        }
    }
    if (!is_acyclic(h.adjacency)) {
        return Violation{"matrix not acyclic", none};
    }

    NatMat out = h.adjacency.transpose();  // row u of `out` = outgoing edges of u

    for (NodeId i = 0; i < k; ++i) {
        for (NodeId j : h.adjacency.row_cols(i)) {
            if (h.labels[i].is_wire() == h.labels[j].is_wire()) {
                return Violation{"edge endpoints not wire-box bipartite", j};
            }
        }
    }

    for (Nat i = 0; i < h.left_arity; ++i) {
        if (!h.labels[h.left_order[i]].is_wire()) {
            return Violation{"interface node not wire-labeled", h.left_order[i]};
        }
    }
    for (Nat j = 0; j < h.right_arity; ++j) {
        if (!h.labels[h.right_order[k - h.right_arity + j]].is_wire()) {
            return Violation{"interface node not wire-labeled",
                             h.right_order[k - h.right_arity + j]};
        }
    }

    Perm left_inv = h.left_order.inverse();
    Perm right_inv = h.right_order.inverse();
    for (NodeId v = 0; v < k; ++v) {
        if (!h.labels[v].is_wire()) {
            continue;
        }
        NodeId indeg = static_cast<NodeId>(h.adjacency.row_cols(v).size());
        NodeId outdeg = static_cast<NodeId>(out.row_cols(v).size());
        if (indeg > 1) {
            return Violation{"wire in-degree exceeds 1", v};
        }
        if (outdeg > 1) {
            return Violation{"wire out-degree exceeds 1", v};
        }
        bool in_left = left_inv[v] < h.left_arity;
        bool in_right = right_inv[v] >= k - h.right_arity;
        if (indeg == 0 && !in_left) {
            return Violation{"wire with no incoming edge not in left interface", v};
        }
        if (indeg == 1 && in_left) {
            return Violation{"left-interface wire has incoming edge", v};
        }
        if (outdeg == 0 && !in_right) {
            return Violation{"wire with no outgoing edge not in right interface", v};
        }
        if (outdeg == 1 && in_right) {
            return Violation{"right-interface wire has outgoing edge", v};
        }
    }

    auto contiguous = [](std::span<const Nat> labels, Nat expected) {
        if (labels.size() != expected) {
            return false;
        }
        std::vector<bool> seen(expected, false);
        for (Nat l : labels) {
            if (l < 1 || l > expected || seen[l - 1]) {
                return false;
            }
            seen[l - 1] = true;
        }
        return true;
    };
    for (NodeId v = 0; v < k; ++v) {
        if (!h.labels[v].is_box()) {
            continue;
        }
        const OpSig& op = (*h.sig)[h.labels[v].op];
        if (!contiguous(h.adjacency.row_values(v), op.arity)) {
            return Violation{"box incoming labels not contiguous", v};
        }
        if (!contiguous(out.row_values(v), op.coarity)) {
            return Violation{"box outgoing labels not contiguous", v};
        }
    }
    return std::nullopt;
}

Har reorder_nodes(const Har& h, const Perm& p) {
    if (p.size() != h.node_count()) {
        throw std::invalid_argument("reorder_nodes: size mismatch");
    }
    if (p.is_identity()) {
        return h;
    }
    Perm inv = p.inverse();
    Har g;
    g.left_arity = h.left_arity;
    g.right_arity = h.right_arity;
    g.adjacency = apply_perm(h.adjacency, p, p);
    g.left_order = compose(inv, h.left_order);
    g.right_order = compose(inv, h.right_order);
    g.labels.resize(h.labels.size());
    for (NodeId i = 0; i < h.node_count(); ++i) {
        g.labels[i] = h.labels[p[i]];
    }
    g.sig = h.sig;
    return g;
}

Har left_boundary_order(const Har& h) {
    return reorder_nodes(h, h.left_order);
}

Har right_boundary_order(const Har& h) {
    return reorder_nodes(h, h.right_order);
}

Har tensor(const Har& f, const Har& g) {
    SignaturePtr sig = merge_signatures(f, g);
    Nat a1 = f.left_arity, a2 = g.left_arity;
    Nat b1 = f.right_arity, b2 = g.right_arity;
    NodeId fk = f.node_count(), gk = g.node_count();

    Har t;
    t.left_arity = a1 + a2;
    t.right_arity = b1 + b2;
    t.adjacency = direct_sum(f.adjacency, g.adjacency);
    t.labels.reserve(static_cast<std::size_t>(fk) + gk);
    t.labels = f.labels;
    t.labels.insert(t.labels.end(), g.labels.begin(), g.labels.end());
    // Interleave the stacked boundary orders so both left interfaces come
    // first (resp. both right interfaces last).
    t.left_order = compose(direct_sum(f.left_order, g.left_order),
                           direct_sum(direct_sum(Perm::identity(a1),
                                                 Perm::block_swap(fk - a1, a2)),
                                      Perm::identity(gk - a2)));
    t.right_order = compose(direct_sum(f.right_order, g.right_order),
                            direct_sum(direct_sum(Perm::identity(fk - b1),
                                                  Perm::block_swap(b1, gk - b2)),
                                       Perm::identity(b2)));
    t.sig = std::move(sig);
    return t;
}

Har compose(const Har& f, const Har& g) {
    if (f.right_arity != g.left_arity) {
        throw std::invalid_argument("compose: boundary mismatch");
    }
    SignaturePtr sig = merge_signatures(f, g);
    Nat b = f.right_arity;
    Har lhs = right_boundary_order(f);  // boundary wires last
    Har rhs = left_boundary_order(g);   // boundary wires first
    NodeId fk = lhs.node_count(), gk = rhs.node_count();
    NodeId shift = fk - b;  // rhs node t becomes node shift + t
    NodeId k = fk + gk - b;

    // The two adjacency regions overlap only on the boundary block, which
    // is zero on both sides (boundary wires have out-degree 0 in lhs and
    // in-degree 0 in rhs), so rows concatenate directly.
    std::vector<NodeId> row_ptr(static_cast<std::size_t>(k) + 1, 0);
    std::vector<NodeId> col_idx;
    std::vector<Nat> values;
    col_idx.reserve(static_cast<std::size_t>(lhs.adjacency.nnz()) + rhs.adjacency.nnz());
    values.reserve(col_idx.capacity());
    for (NodeId i = 0; i < fk; ++i) {
        auto cs = lhs.adjacency.row_cols(i);
        auto vs = lhs.adjacency.row_values(i);
        col_idx.insert(col_idx.end(), cs.begin(), cs.end());
        values.insert(values.end(), vs.begin(), vs.end());
        row_ptr[i + 1] = static_cast<NodeId>(col_idx.size());
    }
    for (NodeId t = b; t < gk; ++t) {
        auto cs = rhs.adjacency.row_cols(t);
        auto vs = rhs.adjacency.row_values(t);
        for (NodeId c : cs) {
            col_idx.push_back(shift + c);
        }
        values.insert(values.end(), vs.begin(), vs.end());
        row_ptr[fk + (t - b) + 1] = static_cast<NodeId>(col_idx.size());
    }

    Har c;
    c.left_arity = f.left_arity;
    c.right_arity = g.right_arity;
    c.adjacency = NatMat::from_csr(k, k, std::move(row_ptr), std::move(col_idx),
                                   std::move(values));
    c.labels = std::move(lhs.labels);
    c.labels.insert(c.labels.end(), rhs.labels.begin() + b, rhs.labels.end());
    c.left_order = direct_sum(lhs.left_order, Perm::identity(gk - b));
    c.right_order = direct_sum(Perm::identity(shift), rhs.right_order);
    c.sig = std::move(sig);
    return c;
}

bool check_permeq(const Har& f, const Har& g, const Perm& p) {
    NodeId k = f.node_count();
    if (g.node_count() != k || p.size() != k || f.left_arity != g.left_arity ||
        f.right_arity != g.right_arity) {
        return false;
    }
    for (NodeId i = 0; i < k; ++i) {
        if (!(g.labels[i] == f.labels[p[i]])) {
            return false;
        }
    }
    // The boundary orders carry meaning only through the interface positions
    // they single out (the cospan legs); the ordering of the remaining nodes
    // is storage bookkeeping, so only the legs must transport along p.
    Perm inv = p.inverse();
    for (Nat i = 0; i < f.left_arity; ++i) {
        if (g.left_order[i] != inv[f.left_order[i]]) {
            return false;
        }
    }
    for (Nat j = 0; j < f.right_arity; ++j) {
        NodeId pos = k - f.right_arity + j;
        if (g.right_order[pos] != inv[f.right_order[pos]]) {
            return false;
        }
    }
    return g.adjacency == apply_perm(f.adjacency, p, p);
}

Perm canonical_order(const Har& h) {
    NodeId k = h.node_count();
    NatMat out = h.adjacency.transpose();

    std::vector<NodeId> missing(k);
    for (NodeId v = 0; v < k; ++v) {
        missing[v] = static_cast<NodeId>(h.adjacency.row_cols(v).size());
    }

    std::vector<NodeId> order;
    order.reserve(k);
    std::vector<bool> visited(k, false);
    std::deque<NodeId> queue;
    for (Nat i = 0; i < h.left_arity; ++i) {
        queue.push_back(h.left_order[i]);
    }

    std::vector<std::pair<Nat, NodeId>> succ;  // (port label, target)
    while (order.size() < k) {
        while (!queue.empty()) {
            NodeId u = queue.front();
            queue.pop_front();
            visited[u] = true;
            order.push_back(u);
            auto cs = out.row_cols(u);
            auto vs = out.row_values(u);
            succ.clear();
            for (std::size_t t = 0; t < cs.size(); ++t) {
                succ.emplace_back(vs[t], cs[t]);
            }
            std::sort(succ.begin(), succ.end());
            for (auto [port, v] : succ) {
                if (--missing[v] == 0) {
                    queue.push_back(v);
                }
            }
        }
        if (order.size() < k) {
            // Remaining sources are boxes with no inputs; schedule the one
            // with the smallest operation name.  Ties fall back to storage
            // order, so such diagrams may not canonicalize uniquely.
            NodeId best = k;
            for (NodeId v = 0; v < k; ++v) {
                if (visited[v] || missing[v] != 0) {
                    continue;
                }
                if (best == k ||
                    (h.sig && h.labels[v].is_box() && h.labels[best].is_box() &&
                     (*h.sig)[h.labels[v].op].name < (*h.sig)[h.labels[best].op].name)) {
                    best = v;
                }
            }
            if (best == k) {
                throw std::invalid_argument("canonical_order: adjacency has a cycle");
            }
            queue.push_back(best);
        }
    }
    return Perm(std::move(order));
}

Har canonicalize(const Har& h) {
    Har c = reorder_nodes(h, canonical_order(h));
    // Normalize the non-interface tails of the boundary orders, which carry
    // no meaning, so that equivalent diagrams canonicalize verbatim-equal.
    NodeId k = c.node_count();
    std::vector<NodeId> lmap;
    lmap.reserve(k);
    std::vector<bool> used(k, false);
    for (Nat i = 0; i < c.left_arity; ++i) {
        lmap.push_back(c.left_order[i]);
        used[c.left_order[i]] = true;
    }
    for (NodeId v = 0; v < k; ++v) {
        if (!used[v]) {
            lmap.push_back(v);
        }
    }
    used.assign(k, false);
    std::vector<NodeId> rtail;
    rtail.reserve(c.right_arity);
    for (Nat j = 0; j < c.right_arity; ++j) {
        NodeId v = c.right_order[k - c.right_arity + j];
        rtail.push_back(v);
        used[v] = true;
    }
    std::vector<NodeId> rmap;
    rmap.reserve(k);
    for (NodeId v = 0; v < k; ++v) {
        if (!used[v]) {
            rmap.push_back(v);
        }
    }
    rmap.insert(rmap.end(), rtail.begin(), rtail.end());
    c.left_order = Perm(std::move(lmap));
    c.right_order = Perm(std::move(rmap));
    return c;
}

bool iso_eq(const Har& f, const Har& g) {
    if (f.left_arity != g.left_arity || f.right_arity != g.right_arity ||
        f.node_count() != g.node_count()) {
        return false;
    }
    return canonicalize(f) == canonicalize(g);
}

std::optional<Perm> find_permeq_witness(const Har& f, const Har& g) {
    if (f.left_arity != g.left_arity || f.right_arity != g.right_arity ||
        f.node_count() != g.node_count()) {
        return std::nullopt;
    }
    if (!(canonicalize(f) == canonicalize(g))) {
        return std::nullopt;
    }
    return compose(canonical_order(f), canonical_order(g).inverse());
}

bool check_bounded_sparsity(const Har& h) {
    Nat max_arity = 1, max_coarity = 1;
    if (h.sig) {
        for (const OpSig& op : *h.sig) {
            max_arity = std::max(max_arity, op.arity);
            max_coarity = std::max(max_coarity, op.coarity);
        }
    }
    NodeId k = h.node_count();
    std::vector<NodeId> col_count(k, 0);
    for (NodeId i = 0; i < k; ++i) {
        if (h.adjacency.row_cols(i).size() > max_arity) {
            return false;
        }
        for (NodeId j : h.adjacency.row_cols(i)) {
            if (++col_count[j] > max_coarity) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace har
