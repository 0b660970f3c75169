#include <benchmark/benchmark.h>

#include "agorum/agenda.hpp"
#include "agorum/logic.hpp"
#include "agorum/formula.hpp"

using namespace agorum;

namespace {

// p1 & ... & pk together with ~(p1 & ... & pk): satisfiable prefix, unsatisfiable whole.
std::vector<Formula> chain(std::size_t k) {
  std::vector<Formula> out;
  Formula all = Formula::top();
  for (std::size_t i = 1; i <= k; ++i) {
    const Formula p = Formula::variable("p" + std::to_string(i));
    out.push_back(p);
    all = Formula::conjunction(all, p);
  }
  out.push_back(Formula::negation(all));
  return out;
}

void BM_Consistency(benchmark::State& state) {
  const std::vector<Formula> fs = chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_consistent(fs));
}
BENCHMARK(BM_Consistency)->DenseRange(2, 12, 2);

void BM_EnumerateJudgmentSets(benchmark::State& state) {
  std::vector<Formula> positives;
  for (std::int64_t i = 1; i <= state.range(0); ++i) positives.push_back(Formula::variable("p" + std::to_string(i)));
  positives.push_back(parse_formula("p1 & p2"));
  const Agenda a(positives);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_judgment_sets(a));
}
BENCHMARK(BM_EnumerateJudgmentSets)->DenseRange(2, 10, 2);

}  // namespace
