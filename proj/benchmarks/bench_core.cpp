#include <benchmark/benchmark.h>

#include <numeric>

#include "electra/cultures.hpp"
#include "electra/domains.hpp"
#include "electra/mapel.hpp"
#include "electra/metrics.hpp"
#include "electra/preprocess.hpp"
#include "electra/rules.hpp"

using namespace electra;

static Election impartial(int m, int n, std::uint64_t seed = 1) { return sample_culture(Culture::impartial, m, n, seed); }

// Single-peaked election with a few voters replaced by random ones.
static Election noisy_sp(int m, int n, int noise) {
  const Election sp = sample_culture(Culture::walsh_sp, m, n, 3);
  const Election ic = impartial(m, noise, 4);
  std::vector<Vote> votes = sp.votes();
  for (int i = 0; i < noise; ++i) votes[static_cast<std::size_t>(i * (n / noise))] = ic.vote(i);
  return Election::unlabeled(m, votes);
}

static void BM_kemeny(benchmark::State& state) {
  const Election e = impartial(static_cast<int>(state.range(0)), 30);
  for (auto _ : state) benchmark::DoNotOptimize(kemeny(e).score);
}
BENCHMARK(BM_kemeny)->Arg(8)->Arg(12)->Arg(15)->Unit(benchmark::kMillisecond);

static void BM_positionwise_distance(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const FrequencyMatrix f = frequency_matrix(impartial(m, 30, 5));
  const FrequencyMatrix g = frequency_matrix(impartial(m, 30, 6));
  for (auto _ : state) benchmark::DoNotOptimize(positionwise_distance(f, g));
}
BENCHMARK(BM_positionwise_distance)->Arg(8)->Arg(15)->Arg(30);

static void BM_similarity_summary(benchmark::State& state) {
  const Election e = impartial(15, 30);
  for (auto _ : state) benchmark::DoNotOptimize(similarity_summary(e).max_kt);
}
BENCHMARK(BM_similarity_summary)->Unit(benchmark::kMillisecond);

static void BM_find_configuration(benchmark::State& state) {
  const auto kind = static_cast<ConfigurationKind>(state.range(0));
  const Election e = sample_culture(Culture::walsh_sp, 15, 30, 7);
  for (auto _ : state) benchmark::DoNotOptimize(find_configuration(e, kind).has_value());
  state.SetLabel(to_string(kind));
}
BENCHMARK(BM_find_configuration)->DenseRange(0, 7)->Unit(benchmark::kMicrosecond);

static void BM_recognize(benchmark::State& state) {
  const auto domain = kAllDomains[static_cast<std::size_t>(state.range(0))];
  const Election e = sample_culture(Culture::walsh_sp, 15, 30, 8);
  for (auto _ : state) benchmark::DoNotOptimize(recognize(e, domain).has_value());
  state.SetLabel(to_string(domain));
}
BENCHMARK(BM_recognize)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

static void BM_deletion_distance(benchmark::State& state) {
  const Election e = noisy_sp(15, 30, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(deletion_distance(e, Domain::single_peaked, DeletionMode::voters).k);
    benchmark::DoNotOptimize(deletion_distance(e, Domain::single_peaked, DeletionMode::candidates).k);
  }
}
BENCHMARK(BM_deletion_distance)->Arg(1)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_rules(benchmark::State& state) {
  const Election e = impartial(15, 30, 9);
  for (auto _ : state) {
    for (Rule r : kAllRules) benchmark::DoNotOptimize(apply_rule(e, r).winners.size());
  }
}
BENCHMARK(BM_rules)->Unit(benchmark::kMillisecond);

static void BM_temporal_profile(benchmark::State& state) {
  const Election e = impartial(15, static_cast<int>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(temporal_profile(e).avg_ordering_change);
}
BENCHMARK(BM_temporal_profile)->Arg(30)->Arg(300);

BENCHMARK_MAIN();
