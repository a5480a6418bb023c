#include "ybelab/doubling.hpp"
#include "ybelab/search.hpp"

#include <benchmark/benchmark.h>

using namespace ybe;

namespace {

FieldSpec F3() { return FieldSpec::prime(3); }

Algebra ut2(FieldSpec f) {
    Algebra a(f, 3);
    a.c(0, 0, 0) = Scalar::one(f);
    a.c(0, 1, 1) = Scalar::one(f);
    a.c(1, 2, 1) = Scalar::one(f);
    a.c(2, 2, 2) = Scalar::one(f);
    return a;
}

Algebra m2(FieldSpec f) {
    Algebra a(f, 4);
    auto idx = [](int i, int j) { return 2 * i + j; };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    if (j == k) a.c(idx(i, j), idx(k, l), idx(i, l)) = Scalar::one(f);
    return a;
}

Tensor2 flagship(FieldSpec f) {
    Algebra a = ut2(f);
    Matrix t(f, 3, 3);
    t.at(0, 1) = Scalar::one(f);
    t.at(1, 0) = -Scalar::one(f);
    return Tensor2(a, t);
}

void bench_aybe_residual_ut2(benchmark::State& state) {
    Tensor2 r = flagship(FieldSpec::rationals());
    for (auto _ : state) benchmark::DoNotOptimize(aybe_residual(r).is_zero());
}
BENCHMARK(bench_aybe_residual_ut2);

void bench_aybe_residual_m2(benchmark::State& state) {
    Algebra a = m2(F3());
    Matrix t(F3(), 4, 4);
    t.at(0, 1) = Scalar::one(F3());
    t.at(2, 3) = Scalar(F3(), 2);
    Tensor2 r(a, t);
    for (auto _ : state) benchmark::DoNotOptimize(aybe_residual(r).is_zero());
}
BENCHMARK(bench_aybe_residual_m2);

void bench_rota_baxter_m2(benchmark::State& state) {
    Algebra a = m2(FieldSpec::rationals());
    LinearMap p = LinearMap::identity(FieldSpec::rationals(), 4);
    Scalar lambda(FieldSpec::rationals(), -1);
    for (auto _ : state)
        benchmark::DoNotOptimize(rota_baxter_residual(a, p, lambda).pass);
}
BENCHMARK(bench_rota_baxter_m2);

void bench_gaybe_residual_ut2(benchmark::State& state) {
    Tensor2 r = flagship(F3());
    for (auto _ : state) benchmark::DoNotOptimize(gaybe_pass(r));
}
BENCHMARK(bench_gaybe_residual_ut2);

void bench_skew_aybe_search_ut2(benchmark::State& state) {
    Algebra a = ut2(F3());
    OperatorContext ctx = OperatorContext::regular(a, Scalar(F3(), 0),
                                                   Scalar(F3(), 0), Scalar(F3(), 0));
    PredicateFn pred = make_predicate("aybe", ctx);
    SearchSpace space = SearchSpace::tensor(F3(), 3, Symmetry::Skew);
    int workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SolutionSet s = search(space, "aybe", pred, workers);
        benchmark::DoNotOptimize(s.elements.size());
    }
}
BENCHMARK(bench_skew_aybe_search_ut2)->Arg(1)->Arg(2)->Arg(8);

void bench_rb_search_nil2(benchmark::State& state) {
    Algebra a(F3(), 2);
    a.c(0, 0, 1) = Scalar::one(F3());
    OperatorContext ctx = OperatorContext::regular(a, Scalar(F3(), 0),
                                                   Scalar(F3(), 0), Scalar(F3(), 0));
    PredicateFn pred = make_predicate("rb", ctx);
    SearchSpace space = SearchSpace::map(F3(), 2, 2);
    for (auto _ : state) {
        SolutionSet s = search(space, "rb", pred, 1);
        benchmark::DoNotOptimize(s.elements.size());
    }
}
BENCHMARK(bench_rb_search_nil2);

}  // namespace

BENCHMARK_MAIN();
