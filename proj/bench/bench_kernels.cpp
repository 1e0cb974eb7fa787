#include <benchmark/benchmark.h>

#include <random>

#include "eqk/toroidal.hpp"

using namespace eqk;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

ToroidalInstance b2_split() {
  return make_instance(build_root_datum("B2"), Fan::from_maximal(2, {{{1, 1}, {2, 3}}, {{2, 3}, {1, 2}}}));
}

void BM_SteinbergG2(benchmark::State& state) {
  auto W = std::make_shared<const WeylGroup>(build_root_datum("G2"));
  for (auto _ : state) benchmark::DoNotOptimize(steinberg_basis(W, mode(state)));
}

void BM_StructureConstantsB2(benchmark::State& state) {
  auto S = steinberg_basis(std::make_shared<const WeylGroup>(build_root_datum("B2")));
  const int n = int(S->group().size());
  for (auto _ : state)
    for (int v = 0; v < n; ++v)
      for (int vp = 0; vp < n; ++vp) benchmark::DoNotOptimize(structure_constants(*S, v, vp, mode(state)));
}

void BM_ToroidalMembershipB2(benchmark::State& state) {
  const ToroidalInstance X = b2_split();
  const ToroidalGraph G = toroidal_gkm_graph(X);
  const int n = int(X.W->size()), m = int(X.cone_count());
  std::vector<std::vector<LaurentPoly>> c(n, std::vector<LaurentPoly>(m, LaurentPoly::constant(4, 1)));
  const FullClass a = expand_invariant(X, compose(X, c));
  for (auto _ : state) benchmark::DoNotOptimize(is_tt_class(G, a, mode(state)));
}

void BM_DecomposeB2(benchmark::State& state) {
  const ToroidalInstance X = b2_split();
  const int n = int(X.W->size()), m = int(X.cone_count());
  std::vector<std::vector<LaurentPoly>> c(n, std::vector<LaurentPoly>(m, LaurentPoly::constant(4, 2)));
  const ReducedClass f = compose(X, c);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(X, f, mode(state)));
}

}  // namespace

BENCHMARK(BM_SteinbergG2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StructureConstantsB2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ToroidalMembershipB2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecomposeB2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
