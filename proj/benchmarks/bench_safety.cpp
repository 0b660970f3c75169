#include <benchmark/benchmark.h>

#include "agorum/axioms.hpp"
#include "agorum/safety.hpp"

using namespace agorum;

namespace {

// p1..pk plus their conjunction: one mi-subset of every size up to k + 1.
Agenda conjunctive(std::size_t k) {
  std::vector<Formula> positives;
  Formula all = Formula::top();
  for (std::size_t i = 1; i <= k; ++i) {
    positives.push_back(Formula::variable("p" + std::to_string(i)));
    all = Formula::conjunction(all, positives.back());
  }
  positives.push_back(all);
  return Agenda(positives);
}

void BM_MinimalInconsistentSubsets(benchmark::State& state) {
  const Agenda a = conjunctive(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_inconsistent_subsets(a));
}
BENCHMARK(BM_MinimalInconsistentSubsets)->DenseRange(2, 6);

void BM_SafetyVerdict(benchmark::State& state) {
  const Agenda a = conjunctive(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(safety_verdict(a, *parse_axiom_class("majority")));
}
BENCHMARK(BM_SafetyVerdict)->DenseRange(2, 6);

}  // namespace
