#include <benchmark/benchmark.h>

#include "cff/hypercube.hpp"

namespace {

void BM_ChiBuildM(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto spec = cff::chi_spec(n);
  std::uint64_t bits = 0;
  for (auto _ : state) {
    const auto m = cff::build_M(spec);
    bits = cff::bit_length(m);
    benchmark::DoNotOptimize(m.get_mpz_t());
  }
  state.counters["bits"] = static_cast<double>(bits);
}
BENCHMARK(BM_ChiBuildM)->RangeMultiplier(2)->Range(4, 64)->Unit(benchmark::kMicrosecond);

void BM_ChiFullTerm(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cff::chi(n, cff::Backend::FullTerm));
  state.counters["bits"] = static_cast<double>(cff::chi_detail(n, cff::Backend::Layered).m_bits);
}
BENCHMARK(BM_ChiFullTerm)->RangeMultiplier(2)->Range(4, 64)->Unit(benchmark::kMicrosecond);

void BM_OmegaBuildM(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto spec = cff::omega_spec(n);
  std::uint64_t bits = 0;
  for (auto _ : state) {
    const auto m = cff::build_M(spec);
    bits = cff::bit_length(m);
    benchmark::DoNotOptimize(m.get_mpz_t());
  }
  state.counters["bits"] = static_cast<double>(bits);
}
BENCHMARK(BM_OmegaBuildM)->DenseRange(4, 24, 4)->Unit(benchmark::kMillisecond);

void BM_OmegaFullTerm(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cff::omega(n, cff::Backend::FullTerm));
}
BENCHMARK(BM_OmegaFullTerm)->DenseRange(4, 24, 4)->Unit(benchmark::kMillisecond);

}  // namespace
