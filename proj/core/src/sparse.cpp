#include "har/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace har {

namespace {

// Stable two-pass counting sort of COO triples into row-major, column-sorted
// order.  O(nnz + rows + cols).
template <class V>
void sort_coo(NodeId rows, NodeId cols, std::vector<NodeId>& r, std::vector<NodeId>& c,
              std::vector<V>& v) {
    const std::size_t n = r.size();
    std::vector<NodeId> r2(n), c2(n);
    std::vector<V> v2(n);

    std::vector<NodeId> count(static_cast<std::size_t>(cols) + 1, 0);
    for (NodeId j : c) {
        ++count[j + 1];
    }
    for (NodeId j = 0; j < cols; ++j) {
        count[j + 1] += count[j];
    }
    for (std::size_t t = 0; t < n; ++t) {
        NodeId slot = count[c[t]]++;
        r2[slot] = r[t];
        c2[slot] = c[t];
        v2[slot] = v[t];
    }

    count.assign(static_cast<std::size_t>(rows) + 1, 0);
    for (NodeId i : r2) {
        ++count[i + 1];
    }
    for (NodeId i = 0; i < rows; ++i) {
        count[i + 1] += count[i];
    }
    for (std::size_t t = 0; t < n; ++t) {
        NodeId slot = count[r2[t]]++;
        r[slot] = r2[t];
        c[slot] = c2[t];
        v[slot] = v2[t];
    }
}

}  // namespace

template <class S>
SparseMat<S> SparseMat<S>::zero(NodeId rows, NodeId cols) {
    SparseMat m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.row_ptr_.assign(static_cast<std::size_t>(rows) + 1, 0);
    return m;
}

template <class S>
SparseMat<S> SparseMat<S>::identity(NodeId n) {
    SparseMat m;
    m.rows_ = n;
    m.cols_ = n;
    m.row_ptr_.resize(static_cast<std::size_t>(n) + 1);
    m.col_idx_.resize(n);
    m.values_.assign(n, S::one);
    for (NodeId i = 0; i <= n; ++i) {
        m.row_ptr_[i] = i;
    }
    for (NodeId i = 0; i < n; ++i) {
        m.col_idx_[i] = i;
    }
    return m;
}

template <class S>
SparseMat<S> SparseMat<S>::from_triples(NodeId rows, NodeId cols,
                                        std::span<const Entry> triples) {
    std::vector<NodeId> r, c;
    std::vector<Value> v;
    r.reserve(triples.size());
    c.reserve(triples.size());
    v.reserve(triples.size());
    for (const Entry& e : triples) {
        if (e.row >= rows || e.col >= cols) {
            throw std::out_of_range("SparseMat::from_triples: index out of range");
        }
        if (e.value == S::zero) {
            continue;
        }
        r.push_back(e.row);
        c.push_back(e.col);
        v.push_back(e.value);
    }
    sort_coo<Value>(rows, cols, r, c, v);

    SparseMat m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.row_ptr_.assign(static_cast<std::size_t>(rows) + 1, 0);
    std::size_t out = 0;
    for (std::size_t t = 0; t < r.size();) {
        Value acc = v[t];
        std::size_t u = t + 1;
        while (u < r.size() && r[u] == r[t] && c[u] == c[t]) {
            acc = S::add(acc, v[u]);
            ++u;
        }
        if (acc != S::zero) {
            r[out] = r[t];
            c[out] = c[t];
            v[out] = acc;
            ++out;
        }
        t = u;
    }
    r.resize(out);
    c.resize(out);
    v.resize(out);
    for (NodeId i : r) {
        ++m.row_ptr_[i + 1];
    }
    for (NodeId i = 0; i < rows; ++i) {
        m.row_ptr_[i + 1] += m.row_ptr_[i];
    }
    m.col_idx_ = std::move(c);
    m.values_ = std::move(v);
    return m;
}

template <class S>
SparseMat<S> SparseMat<S>::from_csr(NodeId rows, NodeId cols, std::vector<NodeId> row_ptr,
                                    std::vector<NodeId> col_idx, std::vector<Value> values) {
    if (row_ptr.size() != static_cast<std::size_t>(rows) + 1 ||
        col_idx.size() != values.size() || row_ptr.back() != col_idx.size()) {
        throw std::invalid_argument("SparseMat::from_csr: inconsistent arrays");
    }
    SparseMat m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.row_ptr_ = std::move(row_ptr);
    m.col_idx_ = std::move(col_idx);
    m.values_ = std::move(values);
    return m;
}

template <class S>
std::span<const NodeId> SparseMat<S>::row_cols(NodeId i) const {
    return {col_idx_.data() + row_ptr_[i], col_idx_.data() + row_ptr_[i + 1]};
}

template <class S>
std::span<const typename S::Value> SparseMat<S>::row_values(NodeId i) const {
    return {values_.data() + row_ptr_[i], values_.data() + row_ptr_[i + 1]};
}

template <class S>
typename S::Value SparseMat<S>::at(NodeId i, NodeId j) const {
    auto cols = row_cols(i);
    auto it = std::lower_bound(cols.begin(), cols.end(), j);
    if (it == cols.end() || *it != j) {
        return S::zero;
    }
    return values_[row_ptr_[i] + static_cast<NodeId>(it - cols.begin())];
}

template <class S>
std::vector<typename SparseMat<S>::Entry> SparseMat<S>::entries() const {
    std::vector<Entry> out;
    out.reserve(nnz());
    for (NodeId i = 0; i < rows_; ++i) {
        for (NodeId t = row_ptr_[i]; t < row_ptr_[i + 1]; ++t) {
            out.push_back({i, col_idx_[t], values_[t]});
        }
    }
    return out;
}

template <class S>
SparseMat<S> SparseMat<S>::transpose() const {
    SparseMat t;
    t.rows_ = cols_;
    t.cols_ = rows_;
    t.row_ptr_.assign(static_cast<std::size_t>(cols_) + 1, 0);
    t.col_idx_.resize(nnz());
    t.values_.resize(nnz());
    for (NodeId j : col_idx_) {
        ++t.row_ptr_[j + 1];
    }
    for (NodeId j = 0; j < cols_; ++j) {
        t.row_ptr_[j + 1] += t.row_ptr_[j];
    }
    std::vector<NodeId> next(t.row_ptr_.begin(), t.row_ptr_.end() - 1);
    for (NodeId i = 0; i < rows_; ++i) {
        for (NodeId u = row_ptr_[i]; u < row_ptr_[i + 1]; ++u) {
            NodeId slot = next[col_idx_[u]]++;
            t.col_idx_[slot] = i;
            t.values_[slot] = values_[u];
        }
    }
    return t;
}

template <class S>
SparseMat<S> matmul(const SparseMat<S>& a, const SparseMat<S>& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matmul: dimension mismatch");
    }
    using Value = typename S::Value;
    std::vector<Value> acc(b.cols(), S::zero);
    std::vector<NodeId> touched;
    std::vector<NodeId> out_r, out_c;
    std::vector<Value> out_v;

    for (NodeId i = 0; i < a.rows(); ++i) {
        touched.clear();
        auto acols = a.row_cols(i);
        auto avals = a.row_values(i);
        for (std::size_t u = 0; u < acols.size(); ++u) {
            NodeId k = acols[u];
            Value v = avals[u];
            auto bcols = b.row_cols(k);
            auto bvals = b.row_values(k);
            for (std::size_t w = 0; w < bcols.size(); ++w) {
                NodeId j = bcols[w];
                if (acc[j] == S::zero) {
                    touched.push_back(j);
                }
                acc[j] = S::add(acc[j], S::mul(v, bvals[w]));
            }
        }
        for (NodeId j : touched) {
            if (acc[j] != S::zero) {
                out_r.push_back(i);
                out_c.push_back(j);
                out_v.push_back(acc[j]);
            }
            acc[j] = S::zero;
        }
    }
    sort_coo<Value>(a.rows(), b.cols(), out_r, out_c, out_v);

    std::vector<NodeId> row_ptr(static_cast<std::size_t>(a.rows()) + 1, 0);
    for (NodeId i : out_r) {
        ++row_ptr[i + 1];
    }
    for (NodeId i = 0; i < a.rows(); ++i) {
        row_ptr[i + 1] += row_ptr[i];
    }
    return SparseMat<S>::from_csr(a.rows(), b.cols(), std::move(row_ptr), std::move(out_c),
                                  std::move(out_v));
}

template <class S>
SparseMat<S> direct_sum(const SparseMat<S>& a, const SparseMat<S>& b) {
    using Value = typename S::Value;
    NodeId rows = a.rows() + b.rows();
    NodeId cols = a.cols() + b.cols();
    std::vector<NodeId> row_ptr;
    std::vector<NodeId> col_idx;
    std::vector<Value> values;
    row_ptr.reserve(static_cast<std::size_t>(rows) + 1);
    col_idx.reserve(static_cast<std::size_t>(a.nnz()) + b.nnz());
    values.reserve(col_idx.capacity());

    row_ptr = a.row_ptr();
    row_ptr.resize(static_cast<std::size_t>(rows) + 1);
    for (NodeId i = 0; i < b.rows(); ++i) {
        row_ptr[a.rows() + i + 1] = a.nnz() + b.row_ptr()[i + 1];
    }
    for (NodeId i = 0; i < a.rows(); ++i) {
        auto cs = a.row_cols(i);
        auto vs = a.row_values(i);
        col_idx.insert(col_idx.end(), cs.begin(), cs.end());
        values.insert(values.end(), vs.begin(), vs.end());
    }
    for (NodeId i = 0; i < b.rows(); ++i) {
        auto cs = b.row_cols(i);
        auto vs = b.row_values(i);
        for (NodeId c : cs) {
            col_idx.push_back(a.cols() + c);
        }
        values.insert(values.end(), vs.begin(), vs.end());
    }
    return SparseMat<S>::from_csr(rows, cols, std::move(row_ptr), std::move(col_idx),
                                  std::move(values));
}

template <class S>
SparseMat<S> apply_perm(const SparseMat<S>& m, const Perm& rowp, const Perm& colp) {
    if (rowp.size() != m.rows() || colp.size() != m.cols()) {
        throw std::invalid_argument("apply_perm: size mismatch");
    }
    using Value = typename S::Value;
    if (rowp.is_identity() && colp.is_identity()) {
        return m;
    }
    Perm colp_inv = colp.inverse();
    std::vector<NodeId> r, c;
    std::vector<Value> v;
    r.reserve(m.nnz());
    c.reserve(m.nnz());
    v.reserve(m.nnz());
    for (NodeId i = 0; i < m.rows(); ++i) {
        NodeId src = rowp[i];
        auto cs = m.row_cols(src);
        auto vs = m.row_values(src);
        for (std::size_t u = 0; u < cs.size(); ++u) {
            r.push_back(i);
            c.push_back(colp_inv[cs[u]]);
            v.push_back(vs[u]);
        }
    }
    sort_coo<Value>(m.rows(), m.cols(), r, c, v);

    std::vector<NodeId> row_ptr(static_cast<std::size_t>(m.rows()) + 1, 0);
    for (NodeId i : r) {
        ++row_ptr[i + 1];
    }
    for (NodeId i = 0; i < m.rows(); ++i) {
        row_ptr[i + 1] += row_ptr[i];
    }
    return SparseMat<S>::from_csr(m.rows(), m.cols(), std::move(row_ptr), std::move(c),
                                  std::move(v));
}

template <class S>
bool is_acyclic(const SparseMat<S>& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("is_acyclic: matrix not square");
    }
    // A cycle in the stored orientation (edge j -> i per entry (i, j)) is a
    // cycle in the reversed one, which walks rows directly.
    NodeId n = m.rows();
    std::vector<NodeId> indeg(n, 0);
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j : m.row_cols(i)) {
            ++indeg[j];
        }
    }
    std::vector<NodeId> stack;
    for (NodeId i = 0; i < n; ++i) {
        if (indeg[i] == 0) {
            stack.push_back(i);
        }
    }
    NodeId seen = 0;
    while (!stack.empty()) {
        NodeId u = stack.back();
        stack.pop_back();
        ++seen;
        for (NodeId j : m.row_cols(u)) {
            if (--indeg[j] == 0) {
                stack.push_back(j);
            }
        }
    }
    return seen == n;
}

template <class S>
SparseMat<S> perm_matrix(const Perm& p) {
    std::vector<typename SparseMat<S>::Entry> es;
    es.reserve(p.size());
    for (NodeId i = 0; i < p.size(); ++i) {
        es.push_back({p[i], i, S::one});
    }
    return SparseMat<S>::from_triples(p.size(), p.size(), es);
}

template class SparseMat<NatSemiring>;
template class SparseMat<BoolSemiring>;

template NatMat matmul(const NatMat&, const NatMat&);
template BoolMat matmul(const BoolMat&, const BoolMat&);
template NatMat direct_sum(const NatMat&, const NatMat&);
template BoolMat direct_sum(const BoolMat&, const BoolMat&);
template NatMat apply_perm(const NatMat&, const Perm&, const Perm&);
template BoolMat apply_perm(const BoolMat&, const Perm&, const Perm&);
template bool is_acyclic(const NatMat&);
template bool is_acyclic(const BoolMat&);
template NatMat perm_matrix<NatSemiring>(const Perm&);
template BoolMat perm_matrix<BoolSemiring>(const Perm&);

}  // namespace har
