#ifndef HAR_PERM_HPP
#define HAR_PERM_HPP

#include "har/types.hpp"

#include <vector>

namespace har {

// Permutation on {0..K-1} stored as an index sequence: position i of the
// reordered sequence holds original element map()[i].  The corresponding
// matrix has a 1 at (row map()[i], column i); compose() matches the matrix
// product, inverse() the transpose.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<NodeId> map);  // throws if not a bijection

    static Perm identity(NodeId n);
    // Exchanges a leading block of size `lead` with a trailing block of
    // size `trail`: block_swap(2,3).map() == {2,3,4,0,1}.
    static Perm block_swap(NodeId lead, NodeId trail);

    NodeId size() const { return static_cast<NodeId>(map_.size()); }
    NodeId operator[](NodeId pos) const { return map_[pos]; }
    const std::vector<NodeId>& map() const { return map_; }

    bool is_identity() const;
    Perm inverse() const;

    bool operator==(const Perm&) const = default;

private:
    struct Unchecked {};
    Perm(std::vector<NodeId> map, Unchecked) : map_(std::move(map)) {}

    std::vector<NodeId> map_;

    friend Perm compose(const Perm&, const Perm&);
    friend Perm direct_sum(const Perm&, const Perm&);
};

// Matrix-product composition: compose(p, q)[i] = p[q[i]].
Perm compose(const Perm& p, const Perm& q);
Perm direct_sum(const Perm& p, const Perm& q);

}  // namespace har

#endif  // HAR_PERM_HPP
