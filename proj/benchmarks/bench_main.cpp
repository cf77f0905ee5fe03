#include <benchmark/benchmark.h>

#include "mdl/generators.hpp"
#include "mdl/spec_string.hpp"

namespace {

void BM_EnumerateParallelogram(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const auto g = mdl::parse_graph_spec("P(" + std::to_string(n) + "," + std::to_string(n) + ")");
  for (auto _ : state) benchmark::DoNotOptimize(mdl::enumerate_perfect_matchings(g));
}
BENCHMARK(BM_EnumerateParallelogram)->DenseRange(2, 4);

void BM_ZDigraphTriangle(benchmark::State& state) {
  const auto g = mdl::parse_graph_spec("T(" + std::to_string(state.range(0)) + ")");
  for (auto _ : state) benchmark::DoNotOptimize(mdl::build_z_digraph(g));
}
BENCHMARK(BM_ZDigraphTriangle)->DenseRange(2, 4);

void BM_MatchingLattice(benchmark::State& state) {
  const auto g = mdl::parse_graph_spec("P(3," + std::to_string(state.range(0)) + ")");
  for (auto _ : state) benchmark::DoNotOptimize(mdl::matching_lattice(mdl::matching_poset(g)));
}
BENCHMARK(BM_MatchingLattice)->DenseRange(1, 4);

void BM_ParallelogramCertificate(benchmark::State& state) {
  const auto h = mdl::truncated_parallelogram(mdl::TruncatedParallelogramSpec::prolate_triangle(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(mdl::verify_iso_parallelogram(h));
}
BENCHMARK(BM_ParallelogramCertificate)->DenseRange(2, 4);

void BM_IdealLattice(benchmark::State& state) {
  const auto p = mdl::FinitePoset::grid(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mdl::order_ideal_lattice(p));
}
BENCHMARK(BM_IdealLattice)->DenseRange(2, 5);

void BM_Decomposition(benchmark::State& state) {
  std::string spec = "link:P(2,2)";
  for (int i = 1; i < state.range(0); ++i) spec += "+C(6)";
  const auto l = mdl::matching_lattice(mdl::matching_poset(mdl::parse_graph_spec(spec)));
  for (auto _ : state) benchmark::DoNotOptimize(mdl::irreducible_decomposition(l));
}
BENCHMARK(BM_Decomposition)->DenseRange(1, 4);

void BM_TreeRealization(benchmark::State& state) {
  const auto shapes = mdl::tree_shapes(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& t : shapes) benchmark::DoNotOptimize(mdl::realize_tree(t));
}
BENCHMARK(BM_TreeRealization)->DenseRange(3, 7);

void BM_ECuts(benchmark::State& state) {
  const auto g = mdl::parse_graph_spec("P(" + std::to_string(state.range(0)) + ",1)");
  for (auto _ : state) benchmark::DoNotOptimize(mdl::find_e_cuts(g));
}
BENCHMARK(BM_ECuts)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();
