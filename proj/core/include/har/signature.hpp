#ifndef HAR_SIGNATURE_HPP
#define HAR_SIGNATURE_HPP

#include "har/types.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace har {

struct OpSig {
    std::string name;
    Nat arity = 0;
    Nat coarity = 0;
    bool operator==(const OpSig&) const = default;
};

// Monoidal signature: an ordered set of named operations with arity and
// coarity.  Names are unique.
class Signature {
public:
    OpId add(std::string name, Nat arity, Nat coarity);  // throws on duplicate
    std::optional<OpId> find(std::string_view name) const;
    const OpSig& operator[](OpId id) const { return ops_[id]; }
    OpId size() const { return static_cast<OpId>(ops_.size()); }
    auto begin() const { return ops_.begin(); }
    auto end() const { return ops_.end(); }

    bool operator==(const Signature& other) const { return ops_ == other.ops_; }

private:
    std::vector<OpSig> ops_;
    std::unordered_map<std::string, OpId, std::hash<std::string>, std::equal_to<>> by_name_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

// Node label: a plain wire, or a box carrying a signature operation.
struct NodeLabel {
    static constexpr OpId wire_tag = ~OpId{0};

    OpId op = wire_tag;

    static NodeLabel wire() { return {}; }
    static NodeLabel box(OpId id) { return {id}; }
    bool is_wire() const { return op == wire_tag; }
    bool is_box() const { return op != wire_tag; }
    bool operator==(const NodeLabel&) const = default;
};

}  // namespace har

#endif  // HAR_SIGNATURE_HPP
