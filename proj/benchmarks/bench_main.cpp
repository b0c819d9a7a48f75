#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "qtsg/counting.hpp"
#include "qtsg/enumeration.hpp"
#include "qtsg/magma.hpp"
#include "qtsg/oracle.hpp"
#include "qtsg/structure.hpp"

using namespace qtsg;

namespace {

FiniteBinOp random_semigroup(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<int> ranks(static_cast<size_t>(n));
  for (auto& r : ranks) r = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
  // compress to a surjective rank vector
  std::vector<int> sorted = ranks;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (auto& r : ranks)
    r = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), r) - sorted.begin()) + 1;
  return build(KimuraDecomposition::uniform(WeakOrder::from_ranks(ranks), Side::right));
}

void BM_Associativity(benchmark::State& state) {
  const FiniteBinOp f = random_semigroup(static_cast<int>(state.range(0)), 17);
  for (auto _ : state) benchmark::DoNotOptimize(is_associative(f));
}
BENCHMARK(BM_Associativity)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_RectangleTest(benchmark::State& state) {
  const FiniteBinOp f = random_semigroup(static_cast<int>(state.range(0)), 17);
  for (auto _ : state) benchmark::DoNotOptimize(rectangle_associativity_test(f));
}
BENCHMARK(BM_RectangleTest)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_WeakOrders(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count(FamilySpec{Family::weak_orders, n, {}, std::nullopt}));
}
BENCHMARK(BM_WeakOrders)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_QtSemigroups(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count(FamilySpec{Family::qt_semigroups, n, {}, std::nullopt}));
}
BENCHMARK(BM_QtSemigroups)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_OracleQt(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_count_qt_associative(n));
}
BENCHMARK(BM_OracleQt)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_QEgf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(q_egf(n));
}
BENCHMARK(BM_QEgf)->Arg(10)->Arg(30)->Unit(benchmark::kMicrosecond);

void BM_QClosed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(q_closed(n));
}
BENCHMARK(BM_QClosed)->Arg(10)->Arg(30)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
