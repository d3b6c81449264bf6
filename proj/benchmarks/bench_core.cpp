#include <benchmark/benchmark.h>

#include <random>

#include "clforms/clsets.hpp"
#include "clforms/exact.hpp"
#include "clforms/fqlinalg.hpp"
#include "clforms/graph.hpp"
#include "clforms/search.hpp"
#include "clforms/spectral.hpp"

using namespace clforms;

namespace {

const SpaceParams& params_for(int which) {
  static const SpaceParams ps[] = {SpaceParams::make(2, 2, 2), SpaceParams::make(2, 2, 3), SpaceParams::make(3, 2, 2)};
  return ps[which];
}

void BM_FqRank(benchmark::State& state) {
  auto f = field_new(static_cast<unsigned>(state.range(0)));
  const auto size = static_cast<std::size_t>(state.range(1));
  std::mt19937_64 rng(1);
  std::vector<Elem> entries(size * size);
  for (auto& e : entries) e = static_cast<Elem>(rng() % f->order());
  const FqMatrix m(f, size, size, entries);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_FqRank)->Args({2, 16})->Args({3, 16})->Args({4, 32});

void BM_IncidenceRank(benchmark::State& state) {
  AttenuatedSpace space(params_for(static_cast<int>(state.range(0))));
  const auto m = build_incidence(space);
  for (auto _ : state) benchmark::DoNotOptimize(exact_rank(m));
}
BENCHMARK(BM_IncidenceRank)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_IncidenceKernel(benchmark::State& state) {
  AttenuatedSpace space(params_for(static_cast<int>(state.range(0))));
  const auto m = build_incidence(space);
  for (auto _ : state) benchmark::DoNotOptimize(integer_kernel_basis(m));
}
BENCHMARK(BM_IncidenceKernel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_VerdictFast(benchmark::State& state) {
  const auto& sp = params_for(1);
  AttenuatedSpace space(sp);
  VerdictEngine engine(space);
  const auto l = nontrivial_family(sp, 1);
  for (auto _ : state) benchmark::DoNotOptimize(engine.verdict(l, Level::Fast));
}
BENCHMARK(BM_VerdictFast);

void BM_VerdictFull(benchmark::State& state) {
  const auto& sp = params_for(1);
  AttenuatedSpace space(sp);
  VerdictEngine engine(space);
  const auto l = nontrivial_family(sp, 1);
  engine.verdict(l, Level::Full);
  for (auto _ : state) benchmark::DoNotOptimize(engine.verdict(l, Level::Full));
}
BENCHMARK(BM_VerdictFull)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveSearch(benchmark::State& state) {
  AttenuatedSpace space(params_for(0));
  VerdictEngine engine(space);
  SearchOptions o;
  o.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive(engine, o));
}
BENCHMARK(BM_ExhaustiveSearch)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_MaxClique(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  Graph g(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (rng() % 2) g.add_edge(a, b);
  for (auto _ : state) benchmark::DoNotOptimize(max_clique(g));
}
BENCHMARK(BM_MaxClique)->Arg(32)->Arg(64);

void BM_Ekr(benchmark::State& state) {
  AttenuatedSpace space(params_for(1));
  for (auto _ : state) benchmark::DoNotOptimize(ekr_check(space));
}
BENCHMARK(BM_Ekr)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
