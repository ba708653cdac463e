#include <benchmark/benchmark.h>

#include <random>

#include "braidquot/homs.hpp"
#include "braidquot/oracle.hpp"
#include "braidquot/presentation.hpp"

using namespace braidquot;

static const GroupParams P{3, 3, 1};

static void BM_MixedMul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto omega = full_alphabet(P);
  const Gamma3MixedElt x = eval_mixed_gamma3(random_word(rng, omega, 12), P);
  const Gamma3MixedElt y = eval_mixed_gamma3(random_word(rng, omega, 12), P);
  for (auto _ : state) benchmark::DoNotOptimize(mixed_mul(x, y));
}
BENCHMARK(BM_MixedMul);

static void BM_EvalMixedGamma3(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto omega = full_alphabet(P);
  const Word w = random_word(rng, omega, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eval_mixed_gamma3(w, P));
}
BENCHMARK(BM_EvalMixedGamma3)->Arg(12)->Arg(64);

static void BM_OracleLattice(benchmark::State& state) {
  const Presentation pres = presentation_mixed(P);
  for (auto _ : state) benchmark::DoNotOptimize(class2_quotient_lattice(pres));
}
BENCHMARK(BM_OracleLattice);

static void BM_OracleMembership(benchmark::State& state) {
  const Presentation pres = presentation_mixed(P);
  const IntLattice lat = class2_quotient_lattice(pres);
  std::mt19937_64 rng(3);
  const auto omega = full_alphabet(P);
  const Word w = random_word(rng, omega, 12);
  for (auto _ : state) benchmark::DoNotOptimize(is_trivial_class2(pres, lat, w));
}
BENCHMARK(BM_OracleMembership);

static void BM_RelatorGeneration(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(presentation_mixed(P));
}
BENCHMARK(BM_RelatorGeneration);

BENCHMARK_MAIN();
