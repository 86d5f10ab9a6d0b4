#include "clusterkit/laurent.hpp"
#include "clusterkit/minors.hpp"
#include "clusterkit/richardson.hpp"
#include "clusterkit/seed.hpp"
#include "clusterkit/weyl.hpp"

#include <benchmark/benchmark.h>

using namespace clusterkit;

namespace {

AmbientPtr three_vars() {
    static AmbientPtr amb = Ambient::make({"x1", "x2", "x3"});
    return amb;
}

LaurentPolynomial dense_poly(int spread) {
    AmbientPtr amb = three_vars();
    LaurentPolynomial out = LaurentPolynomial::zero(amb);
    for (int a = -spread; a <= spread; ++a)
        for (int b = -spread; b <= spread; ++b)
            out = out + LaurentPolynomial::constant(amb, Rational(a + 2 * b + 3)) *
                            LaurentPolynomial::variable(amb, "x1", a) *
                            LaurentPolynomial::variable(amb, "x2", b);
    return out;
}

void bm_laurent_multiply(benchmark::State& state) {
    LaurentPolynomial f = dense_poly(static_cast<int>(state.range(0)));
    LaurentPolynomial g = dense_poly(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(f * g);
}
BENCHMARK(bm_laurent_multiply)->Arg(2)->Arg(4);

void bm_laurent_exact_divide(benchmark::State& state) {
    LaurentPolynomial f = dense_poly(static_cast<int>(state.range(0)));
    LaurentPolynomial g = dense_poly(static_cast<int>(state.range(0)));
    LaurentPolynomial product = f * g;
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_divide(product, g));
}
BENCHMARK(bm_laurent_exact_divide)->Arg(2)->Arg(3);

void bm_cell_mutation_walk(benchmark::State& state) {
    Seed cell = build_nw_seed(CartanDatum::preset("A3"), {1, 2, 1, 3, 2, 1});
    const Word walk = {1, 2, 3, 1, 2, 3};
    for (auto _ : state)
        benchmark::DoNotOptimize(mutate_sequence(cell, walk));
}
BENCHMARK(bm_cell_mutation_walk);

void bm_minor_determinant(benchmark::State& state) {
    const int rank = static_cast<int>(state.range(0));
    Word u, v;
    for (int k = rank; k >= 1; --k)
        for (int i = 1; i <= k; ++i)
            u.push_back(i);
    for (auto _ : state)
        benchmark::DoNotOptimize(generalized_minor(rank, u, v, rank / 2 + 1));
}
BENCHMARK(bm_minor_determinant)->Arg(4)->Arg(6);

void bm_word_reduction(benchmark::State& state) {
    CartanDatum a4 = CartanDatum::preset("A4");
    Word w;
    for (int rep = 0; rep < 6; ++rep)
        for (int i = 1; i <= 4; ++i) {
            w.push_back(i);
            w.push_back(i % 4 + 1);
        }
    for (auto _ : state)
        benchmark::DoNotOptimize(reduce_word(a4, w));
}
BENCHMARK(bm_word_reduction);

} // namespace

BENCHMARK_MAIN();
