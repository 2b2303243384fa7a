#ifndef HAR_CIRCUITS_HPP
#define HAR_CIRCUITS_HPP

#include "har/har.hpp"
#include "har/signature.hpp"

#include <span>
#include <string>
#include <string_view>
#include <utility>

namespace har {

// Boolean-circuit signature: copy 1->2, xor 2->1, and 2->1, not 1->1.
SignaturePtr bool_signature();

// count-fold tensor / sequential composition of a single generator, built
// by balanced folding so that no single combine dominates construction.
Har repeated_tensor(const SignaturePtr& sig, std::string_view op, std::size_t count);
Har repeated_compose(const SignaturePtr& sig, std::string_view op, std::size_t count);

// Ripple-carry adder over the boolean-circuit signature with interface
// (a bits, b bits, carry-in) -> (sum bits, carry-out), bits listed least
// significant first.  `bits` must be a power of two.
Har adder(Nat bits);

// The two composable halves of the 2*half_bits adder doubling step:
// adder(2 * half_bits) == compose(first, second), each half containing one
// half_bits-wide adder.
std::pair<Har, Har> adder_stage_pair(Nat half_bits);

// One benchmark family: build(k) yields the two diagrams of roughly
// 2^(k-1) generators each whose top-level combine is measured.
struct BenchFamily {
    std::string name;
    bool combine_is_compose;
    std::pair<Har, Har> (*build)(int k);

    Har combine(const Har& f, const Har& g) const {
        return combine_is_compose ? compose(f, g) : tensor(f, g);
    }
};

std::span<const BenchFamily> bench_families();
const BenchFamily* find_bench_family(std::string_view name);

}  // namespace har

#endif  // HAR_CIRCUITS_HPP
