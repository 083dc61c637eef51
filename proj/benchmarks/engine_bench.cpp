#include <benchmark/benchmark.h>

#include "syzflip/conditions.hpp"
#include "syzflip/corpus.hpp"
#include "syzflip/groebner.hpp"
#include "syzflip/secant.hpp"
#include "syzflip/syzygy.hpp"

namespace syzflip {
namespace {

void BM_GroebnerRationalNormalCurve(benchmark::State& state) {
  const CorpusEntry e = rational_normal_curve(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(groebner_basis(e.ideal));
  state.SetLabel(e.name);
}
BENCHMARK(BM_GroebnerRationalNormalCurve)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_GroebnerCompleteIntersection(benchmark::State& state) {
  const CorpusEntry e = complete_intersection({2, 2}, 0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(groebner_basis(e.ideal));
}
BENCHMARK(BM_GroebnerCompleteIntersection)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_ResolutionRationalNormalCurve(benchmark::State& state) {
  const CorpusEntry e = rational_normal_curve(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(free_resolution(e.ideal, 3));
}
BENCHMARK(BM_ResolutionRationalNormalCurve)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_ResolutionSegre(benchmark::State& state) {
  const CorpusEntry e = segre(1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(free_resolution(e.ideal, 3));
}
BENCHMARK(BM_ResolutionSegre)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_CheckK2(benchmark::State& state) {
  const CorpusEntry e = rational_normal_curve(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_kd(e.ideal.generators(), 2));
}
BENCHMARK(BM_CheckK2)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_SecantRationalNormalQuartic(benchmark::State& state) {
  const CorpusEntry e = rational_normal_curve(4);
  for (auto _ : state) benchmark::DoNotOptimize(secant_ideal(e.ideal));
}
BENCHMARK(BM_SecantRationalNormalQuartic)->Unit(benchmark::kMillisecond);

void BM_SecantVeroneseSurface(benchmark::State& state) {
  const CorpusEntry e = veronese(2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(secant_ideal(e.ideal));
}
BENCHMARK(BM_SecantVeroneseSurface)->Unit(benchmark::kMillisecond);

void BM_SecantCompleteIntersection(benchmark::State& state) {
  const CorpusEntry e = complete_intersection({2, 2}, 0);
  for (auto _ : state) benchmark::DoNotOptimize(secant_ideal(e.ideal));
}
BENCHMARK(BM_SecantCompleteIntersection)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace
}  // namespace syzflip

BENCHMARK_MAIN();
