#include <benchmark/benchmark.h>

#include "kiselman/boolmat.hpp"
#include "kiselman/counting.hpp"
#include "kiselman/elements.hpp"
#include "kiselman/monotone.hpp"
#include "kiselman/morphisms.hpp"

using namespace kiselman;

namespace {

Word pseudo_random_word(int n, int length, unsigned seed) {
  Word w;
  unsigned state = seed;
  for (int i = 0; i < length; ++i) {
    state = state * 1103515245u + 12345u;
    w.push_back(static_cast<Letter>(1 + (state >> 16) % static_cast<unsigned>(n)));
  }
  return w;
}

void BM_CompletePresentation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    RewriteSystem rs = complete(make_presentation(n));
    benchmark::DoNotOptimize(rs.rules().size());
  }
}
BENCHMARK(BM_CompletePresentation)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_ReduceWord(benchmark::State& state) {
  const KiselmanMonoid k(4);
  const Word w = pseudo_random_word(4, static_cast<int>(state.range(0)), 99);
  for (auto _ : state) {
    benchmark::DoNotOptimize(k.reduce(w));
  }
}
BENCHMARK(BM_ReduceWord)->Arg(8)->Arg(32)->Arg(128);

void BM_EnumerateElements(benchmark::State& state) {
  const KiselmanMonoid k(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(k.elements().size());
  }
}
BENCHMARK(BM_EnumerateElements)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_EnumerateMonotone(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_monotone(n).size());
  }
}
BENCHMARK(BM_EnumerateMonotone)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_BruteForceEndomorphisms(benchmark::State& state) {
  const KiselmanMonoid k(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_endomorphisms(k).size());
  }
}
BENCHMARK(BM_BruteForceEndomorphisms)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_AvoidsPattern(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t u = 0;
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(avoids_pattern(BoolMatrix::from_flat(n, n, u)));
    u = (u + 0x9E3779B9u) % total;
  }
}
BENCHMARK(BM_AvoidsPattern)->DenseRange(3, 5);

void BM_CountPatternAvoiding(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_pattern_avoiding(m, n));
  }
  state.SetComplexityN(std::int64_t{1} << (m * n));
}
BENCHMARK(BM_CountPatternAvoiding)->Args({4, 4})->Args({4, 5})->Args({5, 4})->Unit(benchmark::kMillisecond);

void BM_BoolMul(benchmark::State& state) {
  const auto dn = enumerate_dn(4);
  std::size_t i = 0;
  for (auto _ : state) {
    const BoolMatrix& a = dn[i % dn.size()];
    const BoolMatrix& b = dn[(i * 7 + 3) % dn.size()];
    benchmark::DoNotOptimize(bool_mul(a, b));
    ++i;
  }
}
BENCHMARK(BM_BoolMul);

void BM_Star(benchmark::State& state) {
  const auto mn = enumerate_monotone(4);
  std::size_t i = 0;
  for (auto _ : state) {
    const SetSequence& a = mn[i % mn.size()];
    const SetSequence& b = mn[(i * 7 + 3) % mn.size()];
    benchmark::DoNotOptimize(star(a, b));
    ++i;
  }
}
BENCHMARK(BM_Star);

void BM_ClosedCount(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(closed_count(5, static_cast<int>(state.range(0))).value);
  }
}
BENCHMARK(BM_ClosedCount)->Arg(5)->Arg(40)->Arg(200);

}  // namespace
