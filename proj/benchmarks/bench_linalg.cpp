#include <benchmark/benchmark.h>

#include <random>

#include "superpoisson/matrix.hpp"

using namespace spo;

namespace {

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<Scalar>(rng() % f.order());
  return m;
}

void BM_Rank(benchmark::State& state) {
  Field f(static_cast<int>(state.range(0)));
  const auto n = static_cast<std::size_t>(state.range(1));
  std::mt19937_64 rng(1);
  Matrix m = random_matrix(f, n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rank(f, m));
}
BENCHMARK(BM_Rank)->ArgsProduct({{1, 2, 8}, {64, 256}});

void BM_FieldMul(benchmark::State& state) {
  Field f(static_cast<int>(state.range(0)));
  Scalar acc = 1;
  for (auto _ : state) {
    for (unsigned a = 1; a < f.order(); ++a) acc = f.mul(acc ^ static_cast<Scalar>(a), static_cast<Scalar>(a));
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
