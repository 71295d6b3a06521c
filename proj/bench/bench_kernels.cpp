// Serial reference vs OpenMP kernels: polynomial products and whole-suite
// dispatch. Run with --benchmark_filter to pick one family.

#include "chow/graded_algebra.hpp"
#include "chow/sampling.hpp"
#include "chow/suites.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace chow;

struct Operands {
  GradedElement a, b;
};

// Dense elements of Q[x, y, z, w] up to `degree`; term count grows like degree^4.
Operands operands(int degree) {
  static const auto ring = Ring::make({{"x", 1}, {"y", 1}, {"z", 1}, {"w", 2}});
  Sampler s(static_cast<std::uint64_t>(degree));
  return {s.element(ring, degree), s.element(ring, degree)};
}

void BM_MultiplySerial(benchmark::State& state) {
  const auto ops = operands(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiply_serial(ops.a, ops.b));
  state.counters["terms"] = static_cast<double>(ops.a.size());
}

void BM_MultiplyParallel(benchmark::State& state) {
  const auto ops = operands(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiply_parallel(ops.a, ops.b));
  state.counters["terms"] = static_cast<double>(ops.a.size());
}

void run_flop_suite(benchmark::State& state, bool parallel) {
  SuiteConfig cfg;
  cfg.suite = Suite::flop;
  cfg.mode = Mode::numeric;
  cfg.r_max = static_cast<int>(state.range(0));
  cfg.trials = 16;
  cfg.parallel = parallel;
  for (auto _ : state) {
    auto report = run_suite(cfg);
    if (!report.all_passed()) state.SkipWithError("suite reported a failure");
    benchmark::DoNotOptimize(report);
  }
}

void BM_FlopSuiteSerial(benchmark::State& state) { run_flop_suite(state, false); }
void BM_FlopSuiteParallel(benchmark::State& state) { run_flop_suite(state, true); }

}  // namespace

BENCHMARK(BM_MultiplySerial)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplyParallel)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FlopSuiteSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FlopSuiteParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
