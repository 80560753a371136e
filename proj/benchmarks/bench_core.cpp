#include <benchmark/benchmark.h>

#include "hkcones/chambers.hpp"
#include "hkcones/zariski.hpp"

using namespace hkcones;

namespace {

DivisorClass cls(std::initializer_list<const char*> xs) {
  std::vector<Scalar> v;
  for (const char* x : xs) v.push_back(parse_scalar(x));
  return DivisorClass(v);
}

void BM_DecomposeRank2(benchmark::State& state) {
  const HKModel m = builtin("hilb2-s2");
  const DivisorClass d = cls({"5", "-7"});
  for (auto _ : state) benchmark::DoNotOptimize(decompose(m, d));
}
BENCHMARK(BM_DecomposeRank2);

void BM_DecomposeMixed(benchmark::State& state) {
  const HKModel m = builtin("k3n-mixed");
  const DivisorClass d = cls({"1", "2", "3"});
  for (auto _ : state) benchmark::DoNotOptimize(decompose(m, d));
}
BENCHMARK(BM_DecomposeMixed);

void BM_BruteForceMixed(benchmark::State& state) {
  const HKModel m = builtin("k3n-mixed");
  const DivisorClass d = cls({"1", "2", "3"});
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_decompose(m, d));
}
BENCHMARK(BM_BruteForceMixed);

void BM_StabilityChambers(benchmark::State& state) {
  const HKModel m = builtin("fano-cubic-scroll");
  for (auto _ : state) benchmark::DoNotOptimize(stability_chambers_rank2(m));
}
BENCHMARK(BM_StabilityChambers);

void BM_Destab(benchmark::State& state) {
  const HKModel m = builtin("fano-cubic-scroll");
  const DivisorClass d = cls({"4", "-2"});
  const DivisorClass a = cls({"1", "0"});
  for (auto _ : state) benchmark::DoNotOptimize(destabilizing_numbers(m, d, a));
}
BENCHMARK(BM_Destab);

}  // namespace
BENCHMARK_MAIN();
