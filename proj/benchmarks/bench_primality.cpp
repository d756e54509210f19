#include <benchmark/benchmark.h>

#include "wheel6/bench.hpp"
#include "wheel6/oracle.hpp"
#include "wheel6/primality.hpp"
#include "wheel6/selectors.hpp"
#include "wheel6/sieve.hpp"

namespace {

// Worst case for the naive scan: a prime input walks the whole rectangle.
static void BM_NaivePrime(benchmark::State& state) {
  const auto n = wheel6::largest_prime_at_most(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wheel6::is_prime_naive(n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NaivePrime)->RangeMultiplier(4)->Range(1 << 10, 1 << 17)->Complexity(benchmark::oNSquared);

static void BM_TableLookup(benchmark::State& state) {
  const auto table = wheel6::build_composite_index_table(wheel6::sieve_kmax(1 << 24));
  const auto n = wheel6::largest_prime_at_most(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wheel6::table_verdict(n, table));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TableLookup)->RangeMultiplier(8)->Range(1 << 10, 1 << 24)->Complexity(benchmark::o1);

static void BM_WitnessSearch(benchmark::State& state) {
  const auto n = wheel6::largest_prime_at_most(static_cast<std::uint64_t>(state.range(0)));
  const auto cls = n % 6 == 5 ? wheel6::ResidueClass::A : wheel6::ResidueClass::B;
  const auto k = n % 6 == 5 ? (n + 1) / 6 : (n - 1) / 6;
  for (auto _ : state) benchmark::DoNotOptimize(wheel6::find_composite_witness(cls, k));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WitnessSearch)->RangeMultiplier(16)->Range(1 << 10, 1 << 30)->Complexity();

static void BM_BuildTable(benchmark::State& state) {
  const auto kmax = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wheel6::build_composite_index_table(kmax));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildTable)->RangeMultiplier(8)->Range(1 << 10, 1 << 22)->Complexity(benchmark::oNLogN);

static void BM_WheelSieve(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wheel6::primes_up_to(limit));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WheelSieve)->RangeMultiplier(8)->Range(1 << 12, 1 << 24)->Complexity();

static void BM_EratosthenesSieve(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wheel6::oracle::eratosthenes(limit));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EratosthenesSieve)->RangeMultiplier(8)->Range(1 << 12, 1 << 24)->Complexity();

}  // namespace

BENCHMARK_MAIN();
