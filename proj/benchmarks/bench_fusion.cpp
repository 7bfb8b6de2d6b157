#include <benchmark/benchmark.h>

#include "pfusion/catalog.hpp"
#include "pfusion/cohomology.hpp"
#include "pfusion/fusion.hpp"
#include "pfusion/indexp.hpp"
#include "pfusion/saturate.hpp"
#include "pfusion/tables.hpp"

using namespace pfusion;

namespace {

struct Case {
  const char* group;
  int p;
};
const Case kCases[] = {{"A6", 2}, {"M12", 3}, {"A11", 3}, {"Sp(6,2)", 3}, {"M12", 2}, {"A12", 3}};

void BM_Sylow(benchmark::State& st) {
  PermGroup g = build(kCases[st.range(0)].group);
  for (auto _ : st) benchmark::DoNotOptimize(sylow(g, kCases[st.range(0)].p).order());
  st.SetLabel(kCases[st.range(0)].group);
}

void BM_GroupFusion(benchmark::State& st) {
  const Case& c = kCases[st.range(0)];
  PermGroup g = build(c.group);
  for (auto _ : st) benchmark::DoNotOptimize(group_fusion(g, c.p).classes().size());
  st.SetLabel(c.group);
}

void BM_IndexPrime(benchmark::State& st) {
  const Case& c = kCases[st.range(0)];
  FusionSystem f = group_fusion(build(c.group), c.p);
  for (auto _ : st) benchmark::DoNotOptimize(analyze_index_prime(f).gamma.order);
  st.SetLabel(c.group);
}

void BM_Saturation(benchmark::State& st) {
  const Case& c = kCases[st.range(0)];
  FusionSystem f = group_fusion(build(c.group), c.p);
  for (auto _ : st) benchmark::DoNotOptimize(is_saturated(f).saturated);
  st.SetLabel(c.group);
}

void BM_H1Monomial(benchmark::State& st) {
  MonomialGroup g(2, 2, 3, 1, 3);
  std::vector<ModMatrix> mats;
  for (const auto& x : g.generators()) mats.push_back(g.matrix(x));
  GModule m = module_from_matrices(3, 1, 3, mats);
  for (auto _ : st) benchmark::DoNotOptimize(h1(m).order);
}

}  // namespace

BENCHMARK(BM_Sylow)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GroupFusion)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IndexPrime)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Saturation)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_H1Monomial)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
