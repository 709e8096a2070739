#include <benchmark/benchmark.h>

#include <random>

#include "lgk/chevalley.hpp"
#include "lgk/endofourier.hpp"
#include "lgk/fixedgroup.hpp"
#include "lgk/lembed.hpp"
#include "lgk/splitinv.hpp"

namespace {

using namespace lgk;

constexpr Int N = 24;
const char* kLabels[] = {"A1", "A2", "A3", "B2", "C2", "B3", "D4"};

void BM_EnumerateWeyl(benchmark::State& st) {
  auto d = buildFromLabel(kLabels[st.range(0)], Isogeny::SimplyConnected);
  for (auto _ : st) benchmark::DoNotOptimize(enumerateWeylGroup(d));
  st.SetLabel(kLabels[st.range(0)]);
}
BENCHMARK(BM_EnumerateWeyl)->DenseRange(0, 6);

void BM_TitsSectionAll(benchmark::State& st) {
  auto d = buildFromLabel(kLabels[st.range(0)], Isogeny::SimplyConnected);
  const auto group = enumerateWeylGroup(d);
  for (auto _ : st)
    for (const auto& w : group) benchmark::DoNotOptimize(titsSection(w, N));
  st.SetLabel(kLabels[st.range(0)]);
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(group.size()));
}
BENCHMARK(BM_TitsSectionAll)->DenseRange(0, 6);

void BM_BuildChevalley(benchmark::State& st) {
  auto d = buildFromLabel(kLabels[st.range(0)], Isogeny::SimplyConnected);
  for (auto _ : st) benchmark::DoNotOptimize(buildChevalley(d, N));
  st.SetLabel(kLabels[st.range(0)]);
}
BENCHMARK(BM_BuildChevalley)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_Splcng(benchmark::State& st) {
  auto d = buildFromLabel("B2", Isogeny::SimplyConnected);
  const auto inst = randomSplcngInstance(d, 2, 7, N);
  for (auto _ : st) benchmark::DoNotOptimize(verifySplcng(inst.torus, inst.a, inst.c));
}
BENCHMARK(BM_Splcng);

void BM_SearchRCochains(benchmark::State& st) {
  auto d = buildFromLabel("A2", Isogeny::Adjoint);
  const auto twists = cyclicTwists(d, 2, N);
  for (auto _ : st)
    for (const auto& s : twists) benchmark::DoNotOptimize(searchRCochains(s, 4));
}
BENCHMARK(BM_SearchRCochains)->Unit(benchmark::kMillisecond);

void BM_FixedDatumD4(benchmark::State& st) {
  auto d = buildFromLabel("D4", Isogeny::SimplyConnected);
  const auto th = PinnedAutomorphism::fromPermutation(d, diagramAutomorphisms(*d).at(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(buildFixedDatum(d, th));
}
BENCHMARK(BM_FixedDatumD4)->DenseRange(1, 5);

void BM_FourierRoundTrip(benchmark::State& st) {
  std::mt19937_64 rng(1);
  const FinAbGroup g({2, static_cast<Int>(st.range(0))});
  const auto t = PacketTable::random(g, rng);
  std::vector<Cyc> stable;
  for (std::size_t s = 0; s < g.order(); ++s) stable.push_back(Cyc::zeta(g.field(), static_cast<Int>(s)));
  for (auto _ : st) benchmark::DoNotOptimize(fourierForward(t, fourierInvert(t, stable)));
  st.SetComplexityN(static_cast<std::int64_t>(g.order()));
}
BENCHMARK(BM_FourierRoundTrip)->RangeMultiplier(2)->Range(2, 32)->Complexity();

void BM_Coinvariants(benchmark::State& st) {
  std::mt19937_64 rng(3);
  const auto l = randomLatticeAction(static_cast<std::size_t>(st.range(0)), 2, rng);
  for (auto _ : st) benchmark::DoNotOptimize(fixedTorusCharacters(l, 2));
}
BENCHMARK(BM_Coinvariants)->DenseRange(1, 3);

}  // namespace

BENCHMARK_MAIN();
