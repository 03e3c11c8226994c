#include "ccsub/arith.hpp"
#include "ccsub/engine.hpp"
#include "ccsub/period.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_BuildTableConsecutive(benchmark::State &state) {
  const auto rules = ccsub::RuleSet::consecutive(5);
  const auto n_max = static_cast<ccsub::Count>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ccsub::build_table(rules, n_max));
  }
}
BENCHMARK(BM_BuildTableConsecutive)->Arg(1000)->Arg(4000);

void BM_BuildTableArith(benchmark::State &state) {
  const auto rules = ccsub::RuleSet::finite_arithmetic(8, 13, 3);
  const auto n_max = static_cast<ccsub::Count>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ccsub::build_table(rules, n_max));
  }
}
BENCHMARK(BM_BuildTableArith)->Arg(550)->Arg(5500);

void BM_DetectPeriod(benchmark::State &state) {
  const auto table = ccsub::build_table(ccsub::RuleSet::finite_arithmetic(8, 13, 3), 5500);
  const auto row = table.row(ccsub::Side::Base);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ccsub::detect_period(row));
  }
}
BENCHMARK(BM_DetectPeriod);

void BM_VerifyArith(benchmark::State &state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ccsub::verify_arith({8, 13, 3}, 550));
  }
}
BENCHMARK(BM_VerifyArith);

} // namespace

BENCHMARK_MAIN();
