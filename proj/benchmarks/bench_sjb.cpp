#include "sjb/boolean_fast.hpp"
#include "sjb/boolean_sjb.hpp"
#include "sjb/btk.hpp"
#include "sjb/operators.hpp"
#include "sjb/terwilliger.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_BuildChains(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto chains = sjb::fastb::build_chains(n);
        benchmark::DoNotOptimize(chains);
    }
}
BENCHMARK(BM_BuildChains)->DenseRange(8, 13)->Unit(benchmark::kMillisecond);

void BM_JordanVerify(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto chains = sjb::fastb::build_chains(n);
    for (auto _ : state) {
        auto rep = sjb::fastb::verify_jordan(n, chains);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_JordanVerify)->DenseRange(8, 13)->Unit(benchmark::kMillisecond);

void BM_Orthogonality(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto chains = sjb::fastb::build_chains(n);
    for (auto _ : state) {
        auto rep = sjb::fastb::verify_orthogonality(n, chains);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_Orthogonality)->DenseRange(8, 12)->Unit(benchmark::kMillisecond);

void BM_SjbProduct(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    sjb::PosetSpec spec = sjb::PosetSpec::boolean(n);
    for (auto _ : state) {
        auto basis = sjb::sjb_product(spec);
        benchmark::DoNotOptimize(basis);
    }
}
BENCHMARK(BM_SjbProduct)->DenseRange(6, 10)->Unit(benchmark::kMillisecond);

void BM_UpApply(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    sjb::PosetSpec spec = sjb::PosetSpec::boolean(n);
    std::vector<sjb::Term> terms;
    for (sjb::Point p : sjb::enumerate_rank(spec, n / 2))
        terms.push_back({p, sjb::Rational(1)});
    auto v = sjb::PosetVector::from_terms(std::move(terms));
    for (auto _ : state) {
        auto u = sjb::up_apply(spec, v);
        benchmark::DoNotOptimize(u);
    }
}
BENCHMARK(BM_UpApply)->DenseRange(8, 14)->Unit(benchmark::kMicrosecond);

void BM_BlocksFormulaAll(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto triples = sjb::valid_triples(n);
    for (auto _ : state) {
        for (const auto& e : triples) {
            auto img = sjb::phi_blocks_formula(n, e.i, e.j, e.t);
            benchmark::DoNotOptimize(img);
        }
    }
}
BENCHMARK(BM_BlocksFormulaAll)->DenseRange(6, 10)->Unit(benchmark::kMillisecond);

void BM_ConjugationAll(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto basis = sjb::sjb_boolean(n);
    auto nm = sjb::build_n_matrix(basis);
    auto triples = sjb::valid_triples(n);
    for (auto _ : state) {
        for (const auto& e : triples) {
            auto conj = sjb::phi_blocks_conjugation(nm, e.i, e.j, e.t);
            benchmark::DoNotOptimize(conj);
        }
    }
}
BENCHMARK(BM_ConjugationAll)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
