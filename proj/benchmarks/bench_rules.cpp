#include <benchmark/benchmark.h>

#include "agorum/kemeny.hpp"
#include "agorum/rules.hpp"

using namespace agorum;

namespace {

PreferenceProfile cyclic(std::size_t m) {
  PreferenceProfile pp;
  for (std::size_t i = 0; i < m; ++i) pp.candidates.push_back(std::string(1, static_cast<char>('a' + i)));
  for (std::size_t shift = 0; shift < 3; ++shift) {
    std::vector<std::string> order;
    for (std::size_t i = 0; i < m; ++i) order.push_back(pp.candidates[(i + shift) % m]);
    pp.orders.push_back(order);
  }
  return pp;
}

void BM_DbpKemeny(benchmark::State& state) {
  const Profile p = encode_preference_profile(cyclic(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(apply_dbp(p));
}
BENCHMARK(BM_DbpKemeny)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_MajorityKemeny(benchmark::State& state) {
  const Profile p = encode_preference_profile(cyclic(static_cast<std::size_t>(state.range(0))));
  const QuotaRule maj = majority_rule(p.n());
  for (auto _ : state) benchmark::DoNotOptimize(apply_quota(maj, p));
}
BENCHMARK(BM_MajorityKemeny)->DenseRange(2, 4);

}  // namespace
