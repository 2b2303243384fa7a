#include "har/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace har {

namespace {

SignaturePtr merge_hyp_signatures(const MaHypergraph& f, const MaHypergraph& g) {
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

// Occurrence counts of each node over all source (resp. target) lists.
std::vector<NodeId> source_counts(const MaHypergraph& h) {
    std::vector<NodeId> c(h.node_count, 0);
    for (const Hyperedge& e : h.edges) {
        for (NodeId v : e.sources) {
            ++c[v];
        }
    }
    return c;
}

std::vector<NodeId> target_counts(const MaHypergraph& h) {
    std::vector<NodeId> c(h.node_count, 0);
    for (const Hyperedge& e : h.edges) {
        for (NodeId v : e.targets) {
            ++c[v];
        }
    }
    return c;
}

// Union-find with path halving.
NodeId uf_find(std::vector<NodeId>& parent, NodeId x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

std::optional<Violation> validate_ma(const MaHypergraph& h) {
    NodeId none = h.node_count;
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        const Hyperedge& edge = h.edges[e];
        if (!h.sig || edge.op >= h.sig->size()) {
            return Violation{"hyperedge label not in signature", none};
        }
        const OpSig& op = (*h.sig)[edge.op];
        if (edge.sources.size() != op.arity || edge.targets.size() != op.coarity) {
            return Violation{"hyperedge source/target lengths disagree with label", none};
        }
        for (NodeId v : edge.sources) {
            if (v >= h.node_count) {
                return Violation{"node id out of range", v};
            }
        }
        for (NodeId v : edge.targets) {
            if (v >= h.node_count) {
                return Violation{"node id out of range", v};
            }
        }
    }
    for (NodeId v : h.left) {
        if (v >= h.node_count) {
            return Violation{"node id out of range", v};
        }
    }
    for (NodeId v : h.right) {
        if (v >= h.node_count) {
            return Violation{"node id out of range", v};
        }
    }

    std::vector<NodeId> src = source_counts(h);
    std::vector<NodeId> tgt = target_counts(h);
    for (NodeId v = 0; v < h.node_count; ++v) {
        if (src[v] > 1) {
            return Violation{"monogamy violated: node in several source positions", v};
        }
        if (tgt[v] > 1) {
            return Violation{"monogamy violated: node in several target positions", v};
        }
    }

    // Kahn over the bipartite digraph: vertices are nodes (0..n-1) and
    // hyperedges (n..n+m-1), with node -> edge per source position and
    // edge -> node per target position.
    NodeId n = h.node_count;
    NodeId m = static_cast<NodeId>(h.edges.size());
    std::vector<std::vector<NodeId>> succ(static_cast<std::size_t>(n) + m);
    std::vector<NodeId> indeg(static_cast<std::size_t>(n) + m, 0);
    for (NodeId e = 0; e < m; ++e) {
        for (NodeId v : h.edges[e].sources) {
            succ[v].push_back(n + e);
            ++indeg[n + e];
        }
        for (NodeId w : h.edges[e].targets) {
            succ[n + e].push_back(w);
            ++indeg[w];
        }
    }
    std::vector<NodeId> stack;
    for (NodeId v = 0; v < n + m; ++v) {
        if (indeg[v] == 0) {
            stack.push_back(v);
        }
    }
    NodeId seen = 0;
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        ++seen;
        for (NodeId w : succ[v]) {
            if (--indeg[w] == 0) {
                stack.push_back(w);
            }
        }
    }
    if (seen != n + m) {
        return Violation{"hypergraph not acyclic", none};
    }

    std::vector<bool> in_left(h.node_count, false);
    for (NodeId v : h.left) {
        if (in_left[v]) {
            return Violation{"duplicate node in left interface", v};
        }
        in_left[v] = true;
    }
    std::vector<bool> in_right(h.node_count, false);
    for (NodeId v : h.right) {
        if (in_right[v]) {
            return Violation{"duplicate node in right interface", v};
        }
        in_right[v] = true;
    }
    for (NodeId v = 0; v < h.node_count; ++v) {
        if ((tgt[v] == 0) != in_left[v]) {
            return Violation{"left interface is not the in-degree-zero set", v};
        }
        if ((src[v] == 0) != in_right[v]) {
            return Violation{"right interface is not the out-degree-zero set", v};
        }
    }
    return std::nullopt;
}

MaHypergraph compose_pushout(const MaHypergraph& f, const MaHypergraph& g) {
    if (f.right.size() != g.left.size()) {
        throw std::invalid_argument("compose_pushout: boundary mismatch");
    }
    SignaturePtr sig = merge_hyp_signatures(f, g);
    NodeId total = f.node_count + g.node_count;
    std::vector<NodeId> parent(total);
    std::iota(parent.begin(), parent.end(), NodeId{0});
    for (std::size_t i = 0; i < f.right.size(); ++i) {
        NodeId a = uf_find(parent, f.right[i]);
        NodeId b = uf_find(parent, f.node_count + g.left[i]);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    }

    // Compact representatives in ascending order of first appearance.
    std::vector<NodeId> compact(total, total);
    NodeId next = 0;
    for (NodeId v = 0; v < total; ++v) {
        NodeId r = uf_find(parent, v);
        if (compact[r] == total) {
            compact[r] = next++;
        }
        compact[v] = compact[r];
    }

    MaHypergraph out;
    out.node_count = next;
    out.sig = std::move(sig);
    out.edges.reserve(f.edges.size() + g.edges.size());
    auto remap = [&](const Hyperedge& e, NodeId offset) {
        Hyperedge r;
        r.op = e.op;
        r.sources.reserve(e.sources.size());
        r.targets.reserve(e.targets.size());
        for (NodeId v : e.sources) {
            r.sources.push_back(compact[offset + v]);
        }
        for (NodeId v : e.targets) {
            r.targets.push_back(compact[offset + v]);
        }
        return r;
    };
    for (const Hyperedge& e : f.edges) {
        out.edges.push_back(remap(e, 0));
    }
    for (const Hyperedge& e : g.edges) {
        out.edges.push_back(remap(e, f.node_count));
    }
    out.left.reserve(f.left.size());
    for (NodeId v : f.left) {
        out.left.push_back(compact[v]);
    }
    out.right.reserve(g.right.size());
    for (NodeId v : g.right) {
        out.right.push_back(compact[f.node_count + v]);
    }
    return out;
}

MaHypergraph tensor_disjoint(const MaHypergraph& f, const MaHypergraph& g) {
    MaHypergraph out;
    out.sig = merge_hyp_signatures(f, g);
    out.node_count = f.node_count + g.node_count;
    out.edges = f.edges;
    for (const Hyperedge& e : g.edges) {
        Hyperedge r = e;
        for (NodeId& v : r.sources) {
            v += f.node_count;
        }
        for (NodeId& v : r.targets) {
            v += f.node_count;
        }
        out.edges.push_back(std::move(r));
    }
    out.left = f.left;
    for (NodeId v : g.left) {
        out.left.push_back(f.node_count + v);
    }
    out.right = f.right;
    for (NodeId v : g.right) {
        out.right.push_back(f.node_count + v);
    }
    return out;
}

Har to_har(const MaHypergraph& h) {
    NodeId n = h.node_count;
    NodeId m = static_cast<NodeId>(h.edges.size());
    NodeId k = n + m;

    std::vector<NatMat::Entry> es;
    for (NodeId e = 0; e < m; ++e) {
        const Hyperedge& edge = h.edges[e];
        for (std::size_t t = 0; t < edge.sources.size(); ++t) {
            es.push_back({n + e, edge.sources[t], static_cast<Nat>(t + 1)});
        }
        for (std::size_t t = 0; t < edge.targets.size(); ++t) {
            es.push_back({edge.targets[t], n + e, static_cast<Nat>(t + 1)});
        }
    }

    std::vector<NodeLabel> labels(k, NodeLabel::wire());
    for (NodeId e = 0; e < m; ++e) {
        labels[n + e] = NodeLabel::box(h.edges[e].op);
    }

    std::vector<bool> used(k, false);
    std::vector<NodeId> lmap;
    lmap.reserve(k);
    for (NodeId v : h.left) {
        lmap.push_back(v);
        used[v] = true;
    }
    for (NodeId v = 0; v < k; ++v) {
        if (!used[v]) {
            lmap.push_back(v);
        }
    }
    used.assign(k, false);
    std::vector<NodeId> rtail;
    rtail.reserve(h.right.size());
    for (NodeId v : h.right) {
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

    return Har::make(static_cast<Nat>(h.left.size()), static_cast<Nat>(h.right.size()),
                     NatMat::from_triples(k, k, es), Perm(std::move(lmap)),
                     Perm(std::move(rmap)), std::move(labels), h.sig);
}

MaHypergraph from_har(const Har& h) {
    if (auto v = validate(h)) {
        throw std::invalid_argument("from_har: invalid input: " + v->clause);
    }
    NodeId k = h.node_count();
    std::vector<NodeId> wire_rank(k, k);
    NodeId n = 0;
    for (NodeId v = 0; v < k; ++v) {
        if (h.labels[v].is_wire()) {
            wire_rank[v] = n++;
        }
    }

    MaHypergraph out;
    out.node_count = n;
    out.sig = h.sig;

    NatMat outgoing = h.adjacency.transpose();
    for (NodeId v = 0; v < k; ++v) {
        if (!h.labels[v].is_box()) {
            continue;
        }
        const OpSig& op = (*h.sig)[h.labels[v].op];
        Hyperedge e;
        e.op = h.labels[v].op;
        e.sources.assign(op.arity, 0);
        e.targets.assign(op.coarity, 0);
        auto in_cols = h.adjacency.row_cols(v);
        auto in_vals = h.adjacency.row_values(v);
        for (std::size_t t = 0; t < in_cols.size(); ++t) {
            e.sources[in_vals[t] - 1] = wire_rank[in_cols[t]];
        }
        auto out_cols = outgoing.row_cols(v);
        auto out_vals = outgoing.row_values(v);
        for (std::size_t t = 0; t < out_cols.size(); ++t) {
            e.targets[out_vals[t] - 1] = wire_rank[out_cols[t]];
        }
        out.edges.push_back(std::move(e));
    }

    out.left.reserve(h.left_arity);
    for (Nat i = 0; i < h.left_arity; ++i) {
        out.left.push_back(wire_rank[h.left_order[i]]);
    }
    out.right.reserve(h.right_arity);
    for (Nat j = 0; j < h.right_arity; ++j) {
        out.right.push_back(wire_rank[h.right_order[k - h.right_arity + j]]);
    }
    return out;
}

bool hyp_iso(const MaHypergraph& f, const MaHypergraph& g) {
    if (validate_ma(f) || validate_ma(g)) {
        throw std::invalid_argument("hyp_iso: invalid input");
    }
    return iso_eq(to_har(f), to_har(g));
}

}  // namespace har
