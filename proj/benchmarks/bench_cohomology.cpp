#include <benchmark/benchmark.h>

#include "superpoisson/cohomology.hpp"
#include "superpoisson/divided_powers.hpp"
#include "superpoisson/library.hpp"

using namespace spo;

namespace {

void BM_PoissonCohomology(benchmark::State& state) {
  AlgebraBundle p = library_algebra("example_2_2");
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(poisson_cohomology(p, n, std::nullopt).dim);
}
BENCHMARK(BM_PoissonCohomology)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_LieCoboundary(benchmark::State& state) {
  AlgebraBundle p = build_pi_pi(Field(), make_dp_spec(DPType::PiPi, 1, 2, {1, 1}));
  CochainSpace s(p, adjoint_module(p), 2);
  for (auto _ : state) benchmark::DoNotOptimize(coboundary_matrix(s));
}
BENCHMARK(BM_LieCoboundary)->Unit(benchmark::kMillisecond);

}  // namespace
