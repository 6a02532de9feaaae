#include <benchmark/benchmark.h>

#include "mz/classify.hpp"
#include "mz/difference.hpp"
#include "mz/rootfind.hpp"

namespace {

using namespace mz;

std::vector<Rational> geometric_nodes(int count) {
    std::vector<Rational> nodes = {0};
    Rational p = 1;
    for (int k = 1; k < count; ++k) {
        nodes.push_back(p);
        p *= 2;
    }
    return nodes;
}

void BM_find_roots(benchmark::State& state) {
    // x^d - x - 1 has no rational roots, so this times the simultaneous
    // iteration rather than the exact divisor search
    const int degree = static_cast<int>(state.range(0));
    std::vector<Rational> coeffs(static_cast<size_t>(degree) + 1, 0);
    coeffs[0] = -1;
    coeffs[1] = -1;
    coeffs[static_cast<size_t>(degree)] = 1;
    const Polynomial p{coeffs};
    for (auto _ : state) benchmark::DoNotOptimize(find_roots(p));
}
BENCHMARK(BM_find_roots)->Arg(4)->Arg(8)->Arg(12);

void BM_riemann_weights(benchmark::State& state) {
    const auto nodes = geometric_nodes(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(riemann_weights(nodes));
}
BENCHMARK(BM_riemann_weights)->Arg(4)->Arg(8)->Arg(12);

void BM_classify_difference(benchmark::State& state) {
    const DifferenceOp d = riemann_weights(geometric_nodes(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(classify_difference(d, 2));
}
BENCHMARK(BM_classify_difference)->Arg(4)->Arg(6)->Arg(8);

} // namespace
