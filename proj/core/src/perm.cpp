#include "har/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace har {

Perm::Perm(std::vector<NodeId> map) : map_(std::move(map)) {
    std::vector<bool> seen(map_.size(), false);
    for (NodeId v : map_) {
        if (v >= map_.size() || seen[v]) {
            throw std::invalid_argument("Perm: index sequence is not a bijection");
        }
        seen[v] = true;
    }
}

Perm Perm::identity(NodeId n) {
    std::vector<NodeId> m(n);
    std::iota(m.begin(), m.end(), NodeId{0});
    return Perm(std::move(m), Unchecked{});
}

Perm Perm::block_swap(NodeId lead, NodeId trail) {
    std::vector<NodeId> m(static_cast<std::size_t>(lead) + trail);
    for (NodeId i = 0; i < trail; ++i) {
        m[i] = lead + i;
    }
    for (NodeId i = 0; i < lead; ++i) {
        m[trail + i] = i;
    }
    return Perm(std::move(m), Unchecked{});
}

bool Perm::is_identity() const {
    for (NodeId i = 0; i < size(); ++i) {
        if (map_[i] != i) {
            return false;
        }
    }
    return true;
}

Perm Perm::inverse() const {
    std::vector<NodeId> inv(map_.size());
    for (NodeId i = 0; i < size(); ++i) {
        inv[map_[i]] = i;
    }
    return Perm(std::move(inv), Unchecked{});
}

Perm compose(const Perm& p, const Perm& q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("Perm compose: size mismatch");
    }
    std::vector<NodeId> m(p.size());
    for (NodeId i = 0; i < p.size(); ++i) {
        m[i] = p.map_[q.map_[i]];
    }
    return Perm(std::move(m), Perm::Unchecked{});
}

Perm direct_sum(const Perm& p, const Perm& q) {
    std::vector<NodeId> m;
    m.reserve(static_cast<std::size_t>(p.size()) + q.size());
    m.insert(m.end(), p.map_.begin(), p.map_.end());
    for (NodeId v : q.map_) {
        m.push_back(p.size() + v);
    }
    return Perm(std::move(m), Perm::Unchecked{});
}

}  // namespace har
