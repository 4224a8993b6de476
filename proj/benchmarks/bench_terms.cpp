#include <benchmark/benchmark.h>

#include "cff/closed_forms.hpp"
#include "cff/term.hpp"

namespace {

void BM_GcdTerm(benchmark::State& state) {
  const auto a = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cff::gcd_term(a, a + 1).get_mpz_t());
  state.counters["bits"] = static_cast<double>(cff::gcd_term_bits(a, a + 1));
}
BENCHMARK(BM_GcdTerm)->RangeMultiplier(2)->Range(2, 64);

void BM_Binom2(benchmark::State& state) {
  const auto a = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cff::binom2(a, a / 2).get_mpz_t());
}
BENCHMARK(BM_Binom2)->RangeMultiplier(2)->Range(2, 128);

void BM_FactorialLayered(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cff::factorial_term(n, cff::Backend::Layered).get_mpz_t());
}
BENCHMARK(BM_FactorialLayered)->DenseRange(2, 12, 2);

void BM_EvaluateGcdTerm(benchmark::State& state) {
  const cff::Term t = cff::emit_term({cff::FormulaId::GcdTerm});
  const cff::Env env{{"a", 10}, {"b", 6}};
  for (auto _ : state) benchmark::DoNotOptimize(cff::evaluate(t, env).get_mpz_t());
}
BENCHMARK(BM_EvaluateGcdTerm);

void BM_ParseRender(benchmark::State& state) {
  const std::string text = cff::render(cff::emit_term({cff::FormulaId::GSeries, 4}));
  for (auto _ : state) benchmark::DoNotOptimize(cff::render(cff::parse(text)));
}
BENCHMARK(BM_ParseRender);

}  // namespace
