#include "har/circuits.hpp"

#include "har/term.hpp"

#include <array>
#include <stdexcept>

namespace har {

SignaturePtr bool_signature() {
    static const SignaturePtr sig = [] {
        auto s = std::make_shared<Signature>();
        s->add("copy", 1, 2);
        s->add("xor", 2, 1);
        s->add("and", 2, 1);
        s->add("not", 1, 1);
        return s;
    }();
    return sig;
}

namespace {

Har fold_balanced(const Har& unit, std::size_t count, Har (*combine)(const Har&, const Har&)) {
    if (count == 1) {
        return unit;
    }
    std::size_t half = count / 2;
    return combine(fold_balanced(unit, half, combine),
                   fold_balanced(unit, count - half, combine));
}

Har lookup_singleton(const SignaturePtr& sig, std::string_view op) {
    auto id = sig->find(op);
    if (!id) {
        throw std::invalid_argument("unknown generator '" + std::string(op) + "'");
    }
    return Har::singleton(sig, *id);
}

// One full adder: (a, b, cin) -> (sum, cout) with sum = (a^b)^cin and
// cout = (a&b) ^ ((a^b)&cin); xor replaces or since the two products are
// never simultaneously 1.
const char* const kFullAdderTerm =
    "(copy * id 2) ; (id 2 * copy * id 1) ; (id 1 * sym 1 1 * id 2) ;"
    " (xor * and * id 1) ; (copy * id 2) ; (id 3 * copy) ;"
    " (id 2 * sym 1 1 * id 1) ; (id 3 * sym 1 1) ; (id 1 * sym 1 1 * id 2) ;"
    " (xor * and * id 1) ; (id 1 * sym 1 1) ; (id 1 * xor)";

Har full_adder_cell() {
    static const Har cell = eval_har(*parse_term(kFullAdderTerm), bool_signature());
    return cell;
}

}  // namespace

Har repeated_tensor(const SignaturePtr& sig, std::string_view op, std::size_t count) {
    if (count == 0) {
        return Har::identity(0, sig);
    }
    return fold_balanced(lookup_singleton(sig, op), count, &tensor);
}

Har repeated_compose(const SignaturePtr& sig, std::string_view op, std::size_t count) {
    if (count == 0) {
        throw std::invalid_argument("repeated_compose: count must be positive");
    }
    return fold_balanced(lookup_singleton(sig, op), count, &compose);
}

std::pair<Har, Har> adder_stage_pair(Nat half_bits) {
    Nat n = half_bits;
    Har half = adder(n);
    SignaturePtr sig = bool_signature();

    // Inputs arrive as (a_lo, a_hi, b_lo, b_hi, cin); route the low words
    // and the carry to the leading adder, then thread the middle carry into
    // the trailing one.
    Perm route_lo = direct_sum(
        direct_sum(Perm::identity(n), Perm::block_swap(n, n)), Perm::identity(n + 1));
    Perm carry_in = direct_sum(Perm::identity(2 * n), Perm::block_swap(2 * n, 1));
    Har first = compose(compose(Har::permutation(route_lo, sig),
                                Har::permutation(carry_in, sig)),
                        tensor(half, Har::identity(2 * n, sig)));

    Perm carry_mid = direct_sum(Perm::identity(n), Perm::block_swap(1, 2 * n));
    Har second = compose(Har::permutation(carry_mid, sig),
                         tensor(Har::identity(n, sig), half));
    return {std::move(first), std::move(second)};
}

Har adder(Nat bits) {
    if (bits == 0 || (bits & (bits - 1)) != 0) {
        throw std::invalid_argument("adder: bit width must be a power of two");
    }
    if (bits == 1) {
        return full_adder_cell();
    }
    auto [first, second] = adder_stage_pair(bits / 2);
    return compose(first, second);
}

namespace {

std::pair<Har, Har> build_tensor_family(int k) {
    Har f = repeated_tensor(bool_signature(), "and", std::size_t{1} << (k - 1));
    return {f, f};
}

std::pair<Har, Har> build_compose_small(int k) {
    Har f = repeated_compose(bool_signature(), "not", std::size_t{1} << (k - 1));
    return {f, f};
}

std::pair<Har, Har> build_compose_large(int k) {
    Har f = repeated_tensor(bool_signature(), "not", std::size_t{1} << (k - 1));
    return {f, f};
}

std::pair<Har, Har> build_adder(int k) {
    return adder_stage_pair(Nat{1} << (k - 1));
}

const std::array<BenchFamily, 4> kFamilies = {{
    {"tensor", false, &build_tensor_family},
    {"compose-small", true, &build_compose_small},
    {"compose-large", true, &build_compose_large},
    {"adder", true, &build_adder},
}};

}  // namespace

std::span<const BenchFamily> bench_families() {
    return kFamilies;
}

const BenchFamily* find_bench_family(std::string_view name) {
    for (const BenchFamily& f : kFamilies) {
        if (f.name == name) {
            return &f;
        }
    }
    return nullptr;
}

}  // namespace har
