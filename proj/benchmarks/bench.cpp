#include <benchmark/benchmark.h>

#include "rrfair/construct.hpp"
#include "rrfair/fairness.hpp"
#include "rrfair/io.hpp"
#include "rrfair/oracle.hpp"
#include "rrfair/solver.hpp"

using namespace rrfair;

static void BM_DeltaT(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::vector<Venue> row(m - 1);
  for (int k = 0; k < m - 1; ++k) row[k] = (k * 7 + k / 3) % 2 ? Venue::home : Venue::away;
  for (auto _ : state) benchmark::DoNotOptimize(delta_t(row));
}
BENCHMARK(BM_DeltaT)->Arg(14)->Arg(50)->Arg(100);

static void BM_NaiveDelta(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::vector<Venue> row(m - 1);
  for (int k = 0; k < m - 1; ++k) row[k] = (k * 7 + k / 3) % 2 ? Venue::home : Venue::away;
  for (auto _ : state) benchmark::DoNotOptimize(oracle::naive_delta(row));
}
BENCHMARK(BM_NaiveDelta)->Arg(14)->Arg(50);

static void BM_Construct4k(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(construct_4k(n));
}
BENCHMARK(BM_Construct4k)->Arg(8)->Arg(48)->Arg(96);

static void BM_FairnessReport(benchmark::State& state) {
  const Schedule s = circle_schedule(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fairness_report(s));
}
BENCHMARK(BM_FairnessReport)->Arg(14)->Arg(48);

static void BM_VerifyAndParse(benchmark::State& state) {
  const std::string text = write_schedule(construct_4k(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    const Schedule s = parse_schedule(text);
    benchmark::DoNotOptimize(verify_feasible(s));
    benchmark::DoNotOptimize(is_ranking_fair(s));
  }
}
BENCHMARK(BM_VerifyAndParse)->Arg(48);

static void BM_CanonicalDseq(benchmark::State& state) {
  const DSequence d = family_dseq_4k2(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_dseq(d));
}
BENCHMARK(BM_CanonicalDseq)->Arg(18)->Arg(98);

static void BM_SolveCps(benchmark::State& state) {
  const HapSet haps = cps_hapset(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_ranking_fair(haps));
}
BENCHMARK(BM_SolveCps)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMicrosecond);

static void BM_SolveFamily(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const HapSet haps = hapset_from_dseq(family_dseq_4k2(n), n);
  for (auto _ : state) {
    const auto r = solve_ranking_fair(haps);
    state.counters["nodes"] = static_cast<double>(r.stats.nodes);
  }
}
BENCHMARK(BM_SolveFamily)->Arg(18)->Arg(22)->Unit(benchmark::kMillisecond);

static void BM_OracleSixSingleBreak(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracle::count_schedules({.teams = 6, .single_break = true}));
}
BENCHMARK(BM_OracleSixSingleBreak)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
