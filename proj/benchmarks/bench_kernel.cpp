#include <benchmark/benchmark.h>

#include <random>

#include "biq/biquotient.hpp"
#include "biq/groebner.hpp"
#include "biq/lefschetz.hpp"

namespace {

using biq::Family;
using biq::TorusKind;

biq::GradedAlgebraPresentation presentation(int family, int n) {
  return biq::cohomology_presentation({static_cast<Family>(family), static_cast<unsigned>(n)},
                                      {TorusKind::kFirst, 1});
}

void BM_Buchberger(benchmark::State& state) {
  const auto pres = presentation(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    auto gb = biq::buchberger(pres.relations, pres.context);
    benchmark::DoNotOptimize(gb);
  }
  state.SetLabel(pres.group.name());
}
BENCHMARK(BM_Buchberger)
    ->Args({static_cast<int>(Family::kSU), 4})
    ->Args({static_cast<int>(Family::kSU), 5})
    ->Args({static_cast<int>(Family::kSp), 3})
    ->Args({static_cast<int>(Family::kSp), 4})
    ->Args({static_cast<int>(Family::kSpinEven), 4})
    ->Unit(benchmark::kMillisecond);

void BM_HardLefschetz(benchmark::State& state) {
  const auto pres = presentation(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const biq::CohomologyRing ring(pres);
  const auto w = biq::default_omega(pres);
  biq::HlpOptions options;
  options.modular_certificate = state.range(2) != 0;
  for (auto _ : state) {
    auto v = biq::is_hard_lefschetz(ring, w, options);
    benchmark::DoNotOptimize(v);
  }
  state.SetLabel(pres.group.name() + (options.modular_certificate ? " certified" : " exact"));
}
BENCHMARK(BM_HardLefschetz)
    ->Args({static_cast<int>(Family::kSU), 5, 1})
    ->Args({static_cast<int>(Family::kSU), 5, 0})
    ->Args({static_cast<int>(Family::kSp), 4, 1})
    ->Args({static_cast<int>(Family::kSp), 4, 0})
    ->Unit(benchmark::kMillisecond);

void BM_NormalForm(benchmark::State& state) {
  const auto pres = presentation(static_cast<int>(Family::kSp), 4);
  const auto gb = biq::buchberger(pres.relations, pres.context);
  const auto w = biq::default_omega(pres).poly();
  const auto p = biq::pow(w, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    auto r = biq::normal_form(p, gb);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_NormalForm)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
