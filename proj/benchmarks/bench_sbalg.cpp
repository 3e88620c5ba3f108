#include "sbalg/paperlab.hpp"

#include <benchmark/benchmark.h>

using namespace sbalg;

namespace {

template <Field K>
Matrix<K> dense(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    Matrix<K> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = FieldTraits<K>::random(rng);
    return m;
}

template <Field K>
void BM_Rref(benchmark::State& state)
{
    ModulusScope scope(101);
    const auto m = dense<K>(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(rref(m));
    state.SetComplexityN(state.range(0));
}

template <Field K>
void BM_ProjdimZ(benchmark::State& state)
{
    ModulusScope scope(101);
    const auto m = static_cast<int>(state.range(0));
    const auto z = build_Z<K>(1, m);
    for (auto _ : state)
        benchmark::DoNotOptimize(projdim(z, 16));
}

template <Field K>
void BM_Lemma2Split(benchmark::State& state)
{
    ModulusScope scope(101);
    const auto lp = lambda1prime_algebra(1);
    std::vector<RepPtr<K>> samples;
    for (std::uint64_t s = 1; s <= 16; ++s)
        samples.push_back(lemma2_sample<K>(lp, s, static_cast<std::size_t>(state.range(0))));
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(lemma2_split(samples[i++ % samples.size()]));
}

template <Field K>
void BM_IntervalDecompose(benchmark::State& state)
{
    ModulusScope scope(101);
    const auto u = make_algebra(full_subpresentation(lambda1prime_presentation(1), subquiver_u(), "U"));
    const auto m = random_module<K>(u, 3, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(interval_decompose(m));
}

template <Field K>
void BM_CertifiedIso(benchmark::State& state)
{
    ModulusScope scope(101);
    const auto z = build_Zt<K>(1, 2, static_cast<int>(state.range(0)));
    const auto other = scramble(z, 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(certified_iso(z, other));
}

}  // namespace

BENCHMARK(BM_Rref<Rational>)->RangeMultiplier(2)->Range(8, 64)->Complexity();
BENCHMARK(BM_Rref<ModP>)->RangeMultiplier(2)->Range(8, 128)->Complexity();
BENCHMARK(BM_ProjdimZ<Rational>)->DenseRange(0, 5);
BENCHMARK(BM_ProjdimZ<ModP>)->DenseRange(0, 5);
BENCHMARK(BM_Lemma2Split<Rational>)->Arg(20)->Arg(40);
BENCHMARK(BM_Lemma2Split<ModP>)->Arg(20)->Arg(40);
BENCHMARK(BM_IntervalDecompose<Rational>)->Arg(20)->Arg(60);
BENCHMARK(BM_CertifiedIso<Rational>)->DenseRange(1, 3);
BENCHMARK_MAIN();
