#include <benchmark/benchmark.h>

#include "powerlambda/catalog.hpp"
#include "powerlambda/hampath.hpp"
#include "powerlambda/labelling.hpp"
#include "powerlambda/spectrum.hpp"

using namespace powerlambda;

namespace {

void BM_BuildGroup(benchmark::State& state, const char* spec)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_group(spec));
    }
}
BENCHMARK_CAPTURE(BM_BuildGroup, A6, "A6");
BENCHMARK_CAPTURE(BM_BuildGroup, PSL2_11, "PSL2_11");

void BM_PowerGraph(benchmark::State& state, const char* spec)
{
    const FiniteGroup g = build_group(spec);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_power_graph(g));
    }
}
BENCHMARK_CAPTURE(BM_PowerGraph, A5, "A5");
BENCHMARK_CAPTURE(BM_PowerGraph, PSL2_11, "PSL2_11");
BENCHMARK_CAPTURE(BM_PowerGraph, A7, "A7");

void BM_Constructive(benchmark::State& state, const char* spec)
{
    const FiniteGroup g = build_group(spec);
    const ClassDecomposition dec = cyclic_classes(g);
    const PowerGraph pg = build_power_graph(g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_constructive_hamiltonian(g, dec, pg));
    }
}
BENCHMARK_CAPTURE(BM_Constructive, PSL2_7, "PSL2_7");
BENCHMARK_CAPTURE(BM_Constructive, PSL2_11, "PSL2_11");

void BM_Backtracking(benchmark::State& state, const char* spec)
{
    const PuncturedComplement pc = punctured_complement(build_power_graph(build_group(spec)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(backtracking_hamiltonian(pc));
    }
}
BENCHMARK_CAPTURE(BM_Backtracking, A5, "A5");
BENCHMARK_CAPTURE(BM_Backtracking, S4, "S4");

void BM_ExactLambda(benchmark::State& state, const char* spec)
{
    const Graph g = build_power_graph(build_group(spec)).graph;
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_lambda(g, 40));
    }
}
BENCHMARK_CAPTURE(BM_ExactLambda, D5, "D5");
BENCHMARK_CAPTURE(BM_ExactLambda, Q3, "Q3");
BENCHMARK_CAPTURE(BM_ExactLambda, C12, "C12");

} // namespace

BENCHMARK_MAIN();
