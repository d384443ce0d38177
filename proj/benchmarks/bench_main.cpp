#include <benchmark/benchmark.h>

#include "cubic27/degenerate.hpp"
#include "cubic27/exceptional.hpp"
#include "cubic27/linear_system.hpp"

using namespace cubic27;

namespace {

void BM_IncidenceReport(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(incidence_report());
}
BENCHMARK(BM_IncidenceReport);

void BM_ExceptionalComponents(benchmark::State& state) {
  auto config = standard_config();
  for (auto _ : state) benchmark::DoNotOptimize(exceptional_components(config));
}
BENCHMARK(BM_ExceptionalComponents);

void BM_DegreeBoundSearch(benchmark::State& state) {
  const int d_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(degree_bound_search(d_max));
}
BENCHMARK(BM_DegreeBoundSearch)->Arg(5)->Arg(8)->Arg(12);

void BM_PencilDiscriminant(benchmark::State& state) {
  auto cfg = standard_config();
  std::vector<PointCondition> conds;
  for (int i = 1; i <= 6; ++i) conds.push_back({cfg.point(i), 1});
  conds.push_back({ProjPoint(3, 1, 5), 1});
  conds.push_back({ProjPoint(1, 7, 2), 1});
  auto sys = linear_system(3, conds);
  for (auto _ : state)
    benchmark::DoNotOptimize(singular_members_of_pencil(sys.basis[0], sys.basis[1]));
}
BENCHMARK(BM_PencilDiscriminant)->Unit(benchmark::kMillisecond);

void BM_QuarticWitness(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(standard_quartic_certificate());
}
BENCHMARK(BM_QuarticWitness)->Unit(benchmark::kMillisecond);

void BM_RationalRoots(benchmark::State& state) {
  // degree-12 integer polynomial with two planted rational roots
  IPoly p(std::vector<Int>{Int(1)});
  IPoly factor(std::vector<Int>{Int(-854917), Int(1234577)});
  p = p * factor * IPoly(std::vector<Int>{Int(3), Int(-7)});
  for (int i = 0; i < 10; ++i)
    p = p * IPoly(std::vector<Int>{Int(7 + i), Int(0), Int(11 + i)});
  for (auto _ : state) benchmark::DoNotOptimize(rational_roots(p));
  state.SetLabel("degree " + std::to_string(p.degree()));
}
BENCHMARK(BM_RationalRoots)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
