#include "har/signature.hpp"

#include <stdexcept>

namespace har {

OpId Signature::add(std::string name, Nat arity, Nat coarity) {
    if (by_name_.contains(name)) {
        throw std::invalid_argument("Signature: duplicate operation name '" + name + "'");
    }
    OpId id = size();
    by_name_.emplace(name, id);
    ops_.push_back({std::move(name), arity, coarity});
    return id;
}

std::optional<OpId> Signature::find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) {
        return std::nullopt;
    }
    return it->second;
}

}  // namespace har
