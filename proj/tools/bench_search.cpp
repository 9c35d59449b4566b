// Serial reference vs OpenMP search on the exhaustive kernels.
// Run: bench_search --benchmark_counters_tabular=true
#include <benchmark/benchmark.h>

#include "abcvote/axioms.hpp"
#include "abcvote/corpus.hpp"
#include "abcvote/rules.hpp"
#include "abcvote/solver.hpp"

using namespace abcvote;

namespace {

SearchOptions mode(std::int64_t parallel) {
  SearchOptions o;
  o.mode = parallel ? SearchOptions::Mode::parallel : SearchOptions::Mode::serial;
  return o;
}

const BallotProfile& urn_profile() {
  static const BallotProfile p = random_profile(2024, 60, 22, culture::Urn{4, make_rational(3, 4)});
  return p;
}

void BM_pav(benchmark::State& state) {
  OptimizationRequest req;
  req.k = 6;
  req.objective = objective::WeightedPav{weights::harmonic(urn_profile().num_candidates())};
  req.search = mode(state.range(0));
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    auto r = optimize_committee(urn_profile(), req);
    nodes = r.nodes_explored;
    benchmark::DoNotOptimize(r);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}

void BM_mav(benchmark::State& state) {
  OptimizationRequest req;
  req.k = 5;
  req.objective = objective::Mav{};
  req.search = mode(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(optimize_committee(urn_profile(), req));
}

void BM_ejr_check(benchmark::State& state) {
  const auto inst = reduce_biclique(BipartiteGraph::complete(6, 7), 5);
  const auto options = mode(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_ejr(inst.profile, inst.k, inst.committee, options));
}

void BM_ejrav(benchmark::State& state) {
  const auto p = random_profile(7, 40, 16, culture::UniformSubsets{make_rational(1, 4)});
  RuleOptions options;
  options.search = mode(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_ejrav(p, 5, TieBreak::lexicographic, options));
}

}  // namespace

// Argument: 0 = serial reference, 1 = OpenMP.
BENCHMARK(BM_pav)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mav)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ejr_check)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ejrav)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
