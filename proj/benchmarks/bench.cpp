#include <benchmark/benchmark.h>

#include "hyperseidel/closedform.hpp"
#include "hyperseidel/equitable.hpp"
#include "hyperseidel/seidel.hpp"

using namespace hyperseidel;

static void BM_EigSeidel(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  auto [h, labels] = gen_complete_bipartite(3, m, m);
  SymmetricMatrix s = seidel_matrix(h).real_view();
  for (auto _ : state) benchmark::DoNotOptimize(eig_symmetric(s));
  state.SetComplexityN(2 * m);
}
BENCHMARK(BM_EigSeidel)->DenseRange(4, 16, 4)->Complexity();

static void BM_CharPolyQuotient(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  IntMatrix q = quotient_type1({m, m});
  for (auto _ : state) benchmark::DoNotOptimize(char_poly_exact(q));
}
BENCHMARK(BM_CharPolyQuotient)->Arg(4)->Arg(16)->Arg(64);

static void BM_CharPolyFull(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  auto [h, labels] = gen_complete_bipartite(3, m, m);
  IntMatrix s = seidel_matrix(h).int_view();
  for (auto _ : state) benchmark::DoNotOptimize(char_poly_exact(s));
  state.SetComplexityN(2 * m);
}
BENCHMARK(BM_CharPolyFull)->DenseRange(4, 12, 4)->Complexity();

static void BM_RealRootsXi(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  IntPolynomial xi = xi1({m, m});
  for (auto _ : state) benchmark::DoNotOptimize(real_roots(xi));
}
BENCHMARK(BM_RealRootsXi)->Arg(3)->Arg(8)->Arg(20);

static void BM_EquitableCheck(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  C3Params p{m, m};
  auto [h, labels] = gen_complete_bipartite(3, m, m);
  Hypergraph hd = delete_hyperedge(h, canonical_edge(p, DeletionCase::TypeI));
  SeidelMatrix s(hd);
  VertexPartition part = canonical_partition(p, DeletionCase::TypeI);
  for (auto _ : state) benchmark::DoNotOptimize(check_equitable(s, part));
}
BENCHMARK(BM_EquitableCheck)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
