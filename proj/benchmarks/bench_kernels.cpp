// Microbenchmarks for the sparse kernels and the diagram combinators.  The
// permutation benchmarks check the linear-time claim for matmul against a
// permutation matrix and for the relabeling path.

#include "har/circuits.hpp"
#include "har/har.hpp"
#include "har/sparse.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace har;

// Random square matrix with bounded rows/columns, the shape diagram
// adjacency matrices take.
NatMat bounded_matrix(NodeId n, std::mt19937_64& rng) {
    std::uniform_int_distribution<NodeId> node(0, n - 1);
    std::vector<NatMat::Entry> es;
    es.reserve(2 * n);
    for (NodeId i = 0; i < n; ++i) {
        es.push_back({i, node(rng), 1});
        es.push_back({node(rng), i, 2});
    }
    return NatMat::from_triples(n, n, es);
}

Perm random_perm(NodeId n, std::mt19937_64& rng) {
    std::vector<NodeId> m(n);
    for (NodeId i = 0; i < n; ++i) {
        m[i] = i;
    }
    std::shuffle(m.begin(), m.end(), rng);
    return Perm(std::move(m));
}

void BM_matmul_by_permutation(benchmark::State& state) {
    NodeId n = static_cast<NodeId>(state.range(0));
    std::mt19937_64 rng(42);
    NatMat m = bounded_matrix(n, rng);
    NatMat p = perm_matrix<NatSemiring>(random_perm(n, rng));
    for (auto _ : state) {
        NatMat out = matmul(p, m);
        benchmark::DoNotOptimize(out.nnz());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_matmul_by_permutation)->RangeMultiplier(4)->Range(1 << 8, 1 << 18)->Complexity(benchmark::oN);

void BM_apply_perm(benchmark::State& state) {
    NodeId n = static_cast<NodeId>(state.range(0));
    std::mt19937_64 rng(42);
    NatMat m = bounded_matrix(n, rng);
    Perm p = random_perm(n, rng);
    for (auto _ : state) {
        NatMat out = apply_perm(m, p, p);
        benchmark::DoNotOptimize(out.nnz());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_apply_perm)->RangeMultiplier(4)->Range(1 << 8, 1 << 18)->Complexity(benchmark::oN);

void BM_tensor(benchmark::State& state) {
    Har f = repeated_tensor(bool_signature(), "and", static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        Har out = tensor(f, f);
        benchmark::DoNotOptimize(out.node_count());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_tensor)->RangeMultiplier(4)->Range(1 << 6, 1 << 16)->Complexity(benchmark::oN);

void BM_compose_small_boundary(benchmark::State& state) {
    Har f = repeated_compose(bool_signature(), "not", static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        Har out = compose(f, f);
        benchmark::DoNotOptimize(out.node_count());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_compose_small_boundary)->RangeMultiplier(4)->Range(1 << 6, 1 << 16)->Complexity(benchmark::oN);

void BM_compose_large_boundary(benchmark::State& state) {
    Har f = repeated_tensor(bool_signature(), "not", static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        Har out = compose(f, f);
        benchmark::DoNotOptimize(out.node_count());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_compose_large_boundary)->RangeMultiplier(4)->Range(1 << 6, 1 << 16)->Complexity(benchmark::oN);

void BM_adder_compose(benchmark::State& state) {
    auto [first, second] = adder_stage_pair(static_cast<Nat>(state.range(0)));
    for (auto _ : state) {
        Har out = compose(first, second);
        benchmark::DoNotOptimize(out.node_count());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_adder_compose)->RangeMultiplier(4)->Range(1 << 2, 1 << 10)->Complexity(benchmark::oN);

}  // namespace

BENCHMARK_MAIN();
