#include <benchmark/benchmark.h>

#include "linkform/certify.hpp"
#include "linkform/presentations.hpp"

namespace {

using namespace linkform;

void BM_SmithNormalForm6(benchmark::State& state) {
  IntMatrix m{{385, -270, 100, 20, 0, 0},   {-270, 513, -250, -68, -576, -90},
              {100, -250, 130, 37, 322, 56}, {20, -68, 37, 12, 97, 18},
              {0, -576, 322, 97, 1026, 163}, {0, -90, 56, 18, 163, 34}};
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm6);

void BM_Rank2Presentation(benchmark::State& state) {
  const long p = state.range(0);
  for (auto _ : state)
    for (long q = 1; q < p; ++q)
      if (numtheory::gcd(q, p) == 1) benchmark::DoNotOptimize(rank2_presentation(p, q));
}
BENCHMARK(BM_Rank2Presentation)->Arg(97)->Arg(360);

void BM_EvenPresentation(benchmark::State& state) {
  const long p = state.range(0);
  for (auto _ : state)
    for (long q = 1; q < p; ++q)
      if (numtheory::gcd(q, p) == 1) benchmark::DoNotOptimize(even_presentation(p, q));
}
BENCHMARK(BM_EvenPresentation)->Arg(97)->Arg(144);

void BM_DefinitePresentation(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(definite_presentation(199, 101));
}
BENCHMARK(BM_DefinitePresentation);

void BM_EmbeddingReport(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(embedding_report(97, 31));
}
BENCHMARK(BM_EmbeddingReport);

void BM_ThreeSquares(benchmark::State& state) {
  for (auto _ : state)
    for (long n = 3; n <= 2000; n += 8) benchmark::DoNotOptimize(numtheory::three_squares(n));
}
BENCHMARK(BM_ThreeSquares);

}  // namespace

BENCHMARK_MAIN();
