#include <benchmark/benchmark.h>

#include "fb/fb.hpp"

namespace {

fb::Element longest(int n) {
  std::vector<int> v;
  for (int i = n; i >= 1; --i) v.push_back(i);
  return fb::perm_to_element(fb::Permutation(v));
}

void BM_ReducedWordsLongestS5(benchmark::State& state) {
  const fb::Element w = longest(5);
  for (auto _ : state) benchmark::DoNotOptimize(fb::enumerate_reduced_words(w));
}
BENCHMARK(BM_ReducedWordsLongestS5);

void BM_ClassesLongestS5(benchmark::State& state) {
  const fb::Element w = longest(5);
  fb::EnumerationOptions opts;
  opts.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fb::enumerate_classes(w, opts));
}
BENCHMARK(BM_ClassesLongestS5)->Arg(1)->Arg(2);

void BM_ClassesD4Golden(benchmark::State& state) {
  const fb::CoxeterGraph g = fb::parse_graph("D4");
  const fb::Element w = fb::element_of(g, fb::Word{2, 1, 3, 4, 2, 4, 3, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(fb::contractible_triples(w));
}
BENCHMARK(BM_ClassesD4Golden);

void BM_OracleContractibleD4Golden(benchmark::State& state) {
  const fb::CoxeterGraph g = fb::parse_graph("D4");
  const fb::Element w = fb::element_of(g, fb::Word{2, 1, 3, 4, 2, 4, 3, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(fb::oracle::contractible_triples(w));
}
BENCHMARK(BM_OracleContractibleD4Golden);

void BM_CommutationGraphLongestS5(benchmark::State& state) {
  const fb::Element w = longest(5);
  for (auto _ : state) benchmark::DoNotOptimize(fb::commutation_graph(w));
}
BENCHMARK(BM_CommutationGraphLongestS5);

void BM_PatternCriterionS8(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fb::enumerate_freely_braided(8));
}
BENCHMARK(BM_PatternCriterionS8)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
