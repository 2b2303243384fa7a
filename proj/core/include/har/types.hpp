#ifndef HAR_TYPES_HPP
#define HAR_TYPES_HPP

#include <cstdint>

namespace har {

using NodeId = std::uint32_t;  // node index within one representation
using Nat = std::uint32_t;     // boundary sizes and edge labels
using OpId = std::uint32_t;    // index into a Signature

}  // namespace har

#endif  // HAR_TYPES_HPP
