#include <gtest/gtest.h>

#include "cff/closed_forms.hpp"
#include "cff/errors.hpp"
#include "cff/oracles.hpp"

using namespace cff;

namespace {

Natural nat(std::uint64_t v) { return Natural(static_cast<unsigned long>(v)); }

}  // namespace

TEST(HammingWeight, KummerMatchesPopcount) {
  for (std::uint64_t n = 0; n <= 200; ++n) {
    EXPECT_EQ(hw(nat(n)), oracle::popcount_shift(nat(n)));
    EXPECT_EQ(hw_kummer(n), oracle::popcount_shift(nat(n))) << n;
  }
}

TEST(Nu2, LayeredMatchesHalving) {
  for (std::uint64_t n = 1; n <= 64; ++n) EXPECT_EQ(nu2(nat(n), Backend::Layered), oracle::nu2_halving(nat(n))) << n;
  for (std::uint64_t n : {96ul, 1024ul, 3ul << 10}) EXPECT_EQ(nu2(nat(n), Backend::Layered), oracle::nu2_halving(nat(n)));
}

TEST(Nu2, FullTermWithinBudget) {
  for (std::uint64_t n = 1; n <= 7; ++n) EXPECT_EQ(nu2(nat(n), Backend::FullTerm), oracle::nu2_halving(nat(n))) << n;
  EXPECT_THROW(nu2(nat(8), Backend::FullTerm), CapacityError);
  EXPECT_EQ(nu2(nat(8), Backend::FullTerm, Limits{1u << 24}), 3u);
}

TEST(Nu2, ZeroIsDomainError) {
  for (Backend b : {Backend::FullTerm, Backend::Layered, Backend::Native}) EXPECT_THROW(nu2(0, b), DomainError);
}

TEST(GcdTerm, MatchesEuclidInsideWindow) {
  EXPECT_EQ(gcd_term(10, 6), 2);
  for (std::uint64_t a = 1; a <= 16; ++a)
    for (std::uint64_t b = 1; b <= 16; ++b) {
      if (!gcd_term_in_window(a, b)) continue;
      EXPECT_EQ(gcd_term(a, b), nat(oracle::euclid(a, b))) << a << "," << b;
    }
}

TEST(GcdTerm, OneOneOverflowsItsBlock) {
  // gcd + 1 = 2 does not fit the single-bit block.
  EXPECT_FALSE(gcd_term_in_window(1, 1));
  EXPECT_TRUE(gcd_term_in_window(1, 2));
  EXPECT_EQ(gcd_term(1, 1), 0);
  EXPECT_THROW(gcd_term(0, 3), DomainError);
}

TEST(Binomial, BothFormsMatchPascal) {
  for (std::uint64_t a = 0; a <= 24; ++a)
    for (std::uint64_t b = 0; b <= a; ++b) {
      const Natural expected = oracle::pascal(a, b);
      EXPECT_EQ(binom2(a, b), expected) << a << "," << b;
      if (binom1_in_window(a, b)) EXPECT_EQ(binom1(a, b), expected) << a << "," << b;
    }
}

TEST(Binomial, FirstFormOutsideWindowAtZero) {
  EXPECT_FALSE(binom1_in_window(0, 0));
  EXPECT_EQ(binom1(0, 0), 0);
  EXPECT_THROW(binom1(5, 7), DomainError);
  EXPECT_THROW(binom2(3, 4), DomainError);
}

TEST(Factorial, LayeredAndNative) {
  for (std::uint64_t n = 0; n <= 8; ++n) {
    EXPECT_EQ(factorial_term(n, Backend::Layered), oracle::factorial_product(n)) << n;
    EXPECT_EQ(factorial_term(n, Backend::Native), oracle::factorial_product(n)) << n;
  }
}

TEST(Factorial, FullTerm) {
  EXPECT_EQ(factorial_term(0, Backend::FullTerm), 1);
  EXPECT_EQ(factorial_term(1, Backend::FullTerm), 1);
  EXPECT_THROW(factorial_term(2, Backend::FullTerm), CapacityError);
  EXPECT_EQ(factorial_term(2, Backend::FullTerm, Limits{1u << 25}), 2);
  EXPECT_THROW(factorial_term(3, Backend::FullTerm, Limits{1u << 25}), CapacityError);
}

TEST(Delta, HammingWeightSeparatesZero) {
  for (std::uint64_t b = 1; b <= 10; ++b)
    for (std::uint64_t a = 0; a < (1u << b); ++a) {
      const Natural d = delta(nat(a), b);
      EXPECT_EQ(d, (pow2(b) - 1) * (pow2(b) - a + 1));
      EXPECT_EQ(popcount(d), a == 0 ? 2 * b : b) << a << "," << b;
    }
}

TEST(GSeries, ClosedFormsMatchSummation) {
  std::vector<std::uint64_t> qs{1, 2, 3, 4, 5, 6, 7, 8};
  for (unsigned k = 4; k <= 12; ++k) qs.push_back(1ul << k);
  for (unsigned r : {0u, 1u, 2u, 3u, 4u})
    for (std::uint64_t q : qs)
      for (std::uint64_t t = 0; t <= 30; ++t)
        EXPECT_EQ(g_series(r, nat(q), t), oracle::g_series_naive(r, nat(q), t)) << r << "," << q << "," << t;
}

TEST(GSeries, Examples) {
  // 0 + 3 + 4*9 + 9*27 + 16*81
  EXPECT_EQ(g_series(2, 3, 5), 1578);
  EXPECT_EQ(g_series(0, 1, 7), 7);
  EXPECT_EQ(g_series(1, 1, 5), 10);
  EXPECT_TRUE(g_series_has_closed_form(4));
  EXPECT_FALSE(g_series_has_closed_form(3));
  EXPECT_THROW(g_series(1, 0, 3), DomainError);
}

TEST(GSeries, EmittedTermCoversSingularBranch) {
  for (unsigned r : {0u, 1u, 2u, 4u}) {
    const Term t = emit_term({FormulaId::GSeries, r});
    for (std::uint64_t q : {1ul, 2ul, 5ul, 64ul})
      for (std::uint64_t len = 0; len <= 12; ++len)
        EXPECT_EQ(evaluate(t, {{"q", nat(q)}, {"t", nat(len)}}), oracle::g_series_naive(r, nat(q), len))
            << r << "," << q << "," << len;
  }
}

TEST(PowLemma, MatchesRepeatedProduct) {
  for (std::uint64_t x = 0; x <= 50; ++x)
    for (std::uint64_t m = 1; m <= 8; ++m) EXPECT_EQ(pow_lemma(nat(x), m), oracle::power_product(x, m)) << x << "," << m;
  EXPECT_THROW(pow_lemma(3, 0), DomainError);
}

TEST(Emit, RendersAndReparses) {
  for (int id = 0; id <= static_cast<int>(FormulaId::Omega); ++id) {
    for (EmitMode mode : {EmitMode::Pure, EmitMode::Hybrid}) {
      const Formula f{static_cast<FormulaId>(id), 2};
      const Term t = emit_term(f, mode);
      EXPECT_EQ(parse(render(t)), t) << formula_name(f.id);
      for (const auto& v : free_variables(t)) {
        const auto params = formula_params(f.id);
        EXPECT_NE(std::find(params.begin(), params.end(), v), params.end()) << v;
      }
    }
  }
}

TEST(Emit, PureModeHasNoCalls) {
  EXPECT_FALSE(has_calls(emit_term({FormulaId::Nu2}, EmitMode::Pure)));
  EXPECT_TRUE(has_calls(emit_term({FormulaId::Nu2}, EmitMode::Hybrid)));
  EXPECT_FALSE(has_calls(emit_term({FormulaId::Chi})));
}

TEST(Emit, TermsEvaluateToOracles) {
  EXPECT_EQ(evaluate(emit_term({FormulaId::GcdTerm}), {{"a", 10}, {"b", 6}}), 2);
  EXPECT_EQ(evaluate(emit_term({FormulaId::Delta}), {{"a", 5}, {"b", 4}}), 15 * 12);
  EXPECT_EQ(evaluate(emit_term({FormulaId::Binom1}), {{"a", 10}, {"b", 4}}), 210);
  EXPECT_EQ(evaluate(emit_term({FormulaId::Binom2}), {{"a", 10}, {"b", 4}}), 210);
  EXPECT_EQ(evaluate(emit_term({FormulaId::PowLemma}), {{"x", 7}, {"m", 3}}), 343);
  EXPECT_EQ(evaluate(emit_term({FormulaId::FactorialTerm}), {{"n", 1}}), 1);
  for (std::uint64_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(evaluate(emit_term({FormulaId::Hw}, EmitMode::Hybrid), {{"n", nat(n)}}),
              oracle::popcount_shift(nat(n)));
    EXPECT_EQ(evaluate(emit_term({FormulaId::Nu2}, EmitMode::Hybrid), {{"n", nat(n)}}),
              oracle::nu2_halving(nat(n)));
  }
}

TEST(Emit, FormulaValueAgreesWithTerm) {
  const Env env{{"a", 9}, {"b", 4}};
  for (FormulaId id : {FormulaId::GcdTerm, FormulaId::Binom1, FormulaId::Binom2, FormulaId::Delta})
    EXPECT_EQ(formula_value({id}, env), evaluate(emit_term({id}), env)) << formula_name(id);
  EXPECT_THROW(formula_value({FormulaId::GcdTerm}, {{"a", 1}}), UnboundVariable);
}

TEST(Names, RoundTrip) {
  for (int id = 0; id <= static_cast<int>(FormulaId::Omega); ++id) {
    const auto f = static_cast<FormulaId>(id);
    EXPECT_EQ(formula_from_name(formula_name(f)), f);
  }
  EXPECT_FALSE(formula_from_name("sqrt").has_value());
  EXPECT_EQ(backend_from_string("term"), Backend::FullTerm);
  EXPECT_EQ(backend_from_string("layered"), Backend::Layered);
  EXPECT_FALSE(backend_from_string("fast").has_value());
  for (Backend b : {Backend::FullTerm, Backend::Layered, Backend::Native})
    EXPECT_EQ(backend_from_string(to_string(b)), b);
}
