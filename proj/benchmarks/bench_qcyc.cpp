#include <benchmark/benchmark.h>

#include "qcyc/oracle.hpp"
#include "qcyc/quantum.hpp"

using namespace qcyc;

namespace {

CodeSpec spec_of(int n, const char* g1, const char* a1, const char* g2) {
    return {n, BinPoly::parse(g1), BinPoly::parse(a1), BinPoly::parse(g2)};
}

void BM_FactorXn1(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(factor_xn_minus_1(n));
}
BENCHMARK(BM_FactorXn1)->Arg(15)->Arg(31)->Arg(63);

void BM_SpanBasis(benchmark::State& state) {
    CodeSpec spec = spec_of(15, "x+1", "1", "x^4+x+1");
    for (auto _ : state) benchmark::DoNotOptimize(span_basis(spec));
}
BENCHMARK(BM_SpanBasis);

void BM_MinLeeDistance(benchmark::State& state) {
    // 2^range(0) codewords walked per iteration
    CodeSpec spec = spec_of(7, "x^3+x+1", "x^3+x+1", "x^3+x+1"); // dim 12
    CodeBasis basis = span_basis(spec);
    for (auto _ : state)
        benchmark::DoNotOptimize(min_lee_distance(basis, static_cast<int>(state.range(0))));
    state.SetItemsProcessed(state.iterations() * (1LL << basis.dim()));
}
BENCHMARK(BM_MinLeeDistance)->Arg(24);

void BM_DualCode(benchmark::State& state) {
    CodeBasis basis = span_basis(spec_of(15, "x+1", "1", "x^4+x+1"));
    for (auto _ : state) benchmark::DoNotOptimize(dual_code(basis));
}
BENCHMARK(BM_DualCode);

void BM_ExhaustiveDual(benchmark::State& state) {
    CodeBasis basis = span_basis(spec_of(7, "x+1", "1", "x^3+x+1"));
    for (auto _ : state) benchmark::DoNotOptimize(exhaustive_dual(basis));
    state.SetItemsProcessed(state.iterations() * (1LL << 21));
}
BENCHMARK(BM_ExhaustiveDual);

void BM_SearchQuantum(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(search_quantum(n));
}
BENCHMARK(BM_SearchQuantum)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

} // namespace
