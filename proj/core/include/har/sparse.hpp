#ifndef HAR_SPARSE_HPP
#define HAR_SPARSE_HPP

#include "har/perm.hpp"
#include "har/types.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace har {

struct NatSemiring {
    using Value = std::uint32_t;
    static constexpr Value zero = 0;
    static constexpr Value one = 1;
    static Value add(Value a, Value b) { return a + b; }
    static Value mul(Value a, Value b) { return a * b; }
};

struct BoolSemiring {
    using Value = std::uint8_t;  // 0 or 1
    static constexpr Value zero = 0;
    static constexpr Value one = 1;
    static Value add(Value a, Value b) { return a | b; }
    static Value mul(Value a, Value b) { return a & b; }
};

// Sparse matrix over a semiring: compressed rows with column-sorted entries.
// An entry (i, j) = v reads as "node j has an outgoing edge to node i with
// label v"; column j lists the outgoing edges of node j.
template <class S>
class SparseMat {
public:
    using Value = typename S::Value;

    struct Entry {
        NodeId row;
        NodeId col;
        Value value;
        bool operator==(const Entry&) const = default;
    };

    SparseMat() = default;

    static SparseMat zero(NodeId rows, NodeId cols);
    static SparseMat identity(NodeId n);
    // Indices are range-checked; duplicate (row, col) pairs are summed in
    // the semiring and zero values dropped.
    static SparseMat from_triples(NodeId rows, NodeId cols, std::span<const Entry> triples);
    // Arrays must already be canonical (sorted rows, column-sorted, no
    // duplicates, no zeros); used by kernels and file readers.
    static SparseMat from_csr(NodeId rows, NodeId cols, std::vector<NodeId> row_ptr,
                              std::vector<NodeId> col_idx, std::vector<Value> values);

    NodeId rows() const { return rows_; }
    NodeId cols() const { return cols_; }
    NodeId nnz() const { return static_cast<NodeId>(col_idx_.size()); }

    const std::vector<NodeId>& row_ptr() const { return row_ptr_; }
    std::span<const NodeId> row_cols(NodeId i) const;
    std::span<const Value> row_values(NodeId i) const;
    Value at(NodeId i, NodeId j) const;  // S::zero when absent

    std::vector<Entry> entries() const;
    SparseMat transpose() const;

    bool operator==(const SparseMat&) const = default;

private:
    NodeId rows_ = 0;
    NodeId cols_ = 0;
    std::vector<NodeId> row_ptr_ = {0};
    std::vector<NodeId> col_idx_;
    std::vector<Value> values_;
};

// Semiring product a * b (Gustavson row-merge; linear in rows + nnz + the
// non-trivial scalar multiplications).
template <class S>
SparseMat<S> matmul(const SparseMat<S>& a, const SparseMat<S>& b);

// Block-diagonal sum |a 0; 0 b|.
template <class S>
SparseMat<S> direct_sum(const SparseMat<S>& a, const SparseMat<S>& b);

// result[i][j] = m[rowp[i]][colp[j]], by index relabeling plus per-row
// reordering in O(nnz + rows + cols); equals rowp^T * m * colp.
template <class S>
SparseMat<S> apply_perm(const SparseMat<S>& m, const Perm& rowp, const Perm& colp);

// True iff the directed graph with an edge j -> i per entry (i, j) has no
// directed cycle (Kahn's algorithm).
template <class S>
bool is_acyclic(const SparseMat<S>& m);

template <class S>
SparseMat<S> perm_matrix(const Perm& p);

using NatMat = SparseMat<NatSemiring>;
using BoolMat = SparseMat<BoolSemiring>;

extern template class SparseMat<NatSemiring>;
extern template class SparseMat<BoolSemiring>;

}  // namespace har

#endif  // HAR_SPARSE_HPP
