#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "fnvalence/pattern_normalize.hpp"
#include "fnvalence/shared_patterns.hpp"

using namespace fnv;

namespace {

std::vector<ValencePattern> random_patterns(int n, unsigned seed) {
  fixtures::PatternGen gen(seed);
  return gen.pattern_set(n);
}

std::vector<SentencePattern> random_sentences(int n, unsigned seed) {
  fixtures::PatternGen gen(seed);
  std::vector<SentencePattern> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(gen.sentence_pattern());
  return out;
}

void BM_Subsumes(benchmark::State& state) {
  auto patterns = random_patterns(64, 7);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& a = patterns[i % patterns.size()];
    const auto& b = patterns[(i * 31 + 7) % patterns.size()];
    benchmark::DoNotOptimize(subsumes(a, b));
    ++i;
  }
}
BENCHMARK(BM_Subsumes);

void BM_SharedSet(benchmark::State& state) {
  auto fn1 = random_patterns(static_cast<int>(state.range(0)), 11);
  auto fn2 = random_patterns(static_cast<int>(state.range(0)), 13);
  for (auto _ : state) {
    auto shared = shared_set(fn1, "l1", fn2, "l2");
    benchmark::DoNotOptimize(shared.patterns.size());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SharedSet)->Range(8, 256)->Complexity();

void BM_Normalize(benchmark::State& state) {
  auto corpus = random_sentences(static_cast<int>(state.range(0)), 17);
  for (auto _ : state) {
    auto valences = normalize(corpus);
    benchmark::DoNotOptimize(valences.size());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Normalize)->Range(64, 4096)->Complexity();

void BM_Coverage(benchmark::State& state) {
  auto shared = shared_set(random_patterns(32, 19), "l1",
                           random_patterns(32, 23), "l2");
  auto corpus = random_sentences(static_cast<int>(state.range(0)), 29);
  for (auto _ : state)
    benchmark::DoNotOptimize(compute_coverage(shared, corpus));
}
BENCHMARK(BM_Coverage)->Range(64, 1024);

}  // namespace

BENCHMARK_MAIN();
