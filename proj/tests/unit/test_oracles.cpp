#include <gtest/gtest.h>

#include "cff/errors.hpp"
#include "cff/oracles.hpp"

using namespace cff;
using namespace cff::oracle;

TEST(Residues, ChiExamples) {
  EXPECT_EQ(chi_residue_count(4), 2u);
  EXPECT_EQ(chi_residue_count(7), 1u);
  EXPECT_EQ(chi_residue_count(50), 5u);
  EXPECT_EQ(chi_residue_count(1), 1u);
  EXPECT_THROW(chi_residue_count(0), DomainError);
}

TEST(Residues, OmegaExamples) {
  EXPECT_EQ(omega_residue_count(1), 2u);
  EXPECT_EQ(omega_residue_count(10), 8u);
  EXPECT_EQ(omega_residue_count(12), 8u);
  EXPECT_THROW(omega_residue_count(0), DomainError);
}

TEST(Residues, MatchReferenceUpTo2000) {
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    ASSERT_EQ(chi_residue_count(n), chi_square_scan(n)) << n;
    ASSERT_EQ(omega_residue_count(n), std::uint64_t{2} << omega_trial(n)) << n;
  }
}

TEST(Systems, SmallestDivisorExamples) {
  auto r = smallest_divisor_system_count(15);
  EXPECT_EQ(r.count, 2u);
  EXPECT_EQ(r.predicted, 2u);
  EXPECT_TRUE(r.agrees);
  EXPECT_EQ(smallest_divisor_system_count(7).count, 6u);
  EXPECT_EQ(smallest_divisor_system_count(4).count, 1u);
  EXPECT_THROW(smallest_divisor_system_count(1), RangeError);
  EXPECT_THROW(smallest_divisor_system_count(25), RangeError);
}

TEST(Systems, GreatestPrimeExamples) {
  auto r = greatest_prime_system_count(12);
  EXPECT_EQ(r.count, 2u);
  EXPECT_EQ(r.predicted, 2u);
  EXPECT_EQ(greatest_prime_system_count(5).count, 4u);
  EXPECT_EQ(greatest_prime_system_count(9).count, 2u);
  EXPECT_THROW(greatest_prime_system_count(21), RangeError);
}

TEST(Systems, CountsMatchPredictions) {
  for (std::uint64_t n = 2; n <= 24; ++n) {
    const auto r = smallest_divisor_system_count(n);
    EXPECT_TRUE(r.agrees) << n << ": " << r.count << " vs " << r.predicted;
    EXPECT_EQ(r.lemma, Lemma::SmallestDivisorSystem);
  }
  for (std::uint64_t n = 2; n <= 20; ++n) {
    const auto r = greatest_prime_system_count(n);
    EXPECT_TRUE(r.agrees) << n << ": " << r.count << " vs " << r.predicted;
  }
}

TEST(Box, Enumeration) {
  const HypercubeSpec square{1, 6, 5, 9, {Monomial{1, {1}, {2}}, Monomial{-6, {1}, {1}}}};
  EXPECT_EQ(enumerate_box_zeros(square), 1u);
  EXPECT_EQ(enumerate_box_zeros(HypercubeSpec{1, 5, 1, 1, {}}), 0u);
  EXPECT_EQ(enumerate_box_zeros(HypercubeSpec{1, 3, 1, 0, {}}), 3u);
  // x - y on [0, 4]^2 vanishes on the diagonal.
  const HypercubeSpec diag{2, 5, 4, 0, {Monomial{1, {1, 1}, {1, 0}}, Monomial{-1, {1, 1}, {0, 1}}}};
  EXPECT_EQ(enumerate_box_zeros(diag), 5u);
  EXPECT_THROW(enumerate_box_zeros(HypercubeSpec{2, 4000, 1, 0, {}}), RangeError);
}

TEST(Box, MByDefinition) {
  // Single point, f = 0: delta(0, u) = 2^(2u) - 1.
  EXPECT_EQ(m_by_definition(HypercubeSpec{1, 1, 3, 0, {}}), 63);
  // Two points with f = 1: blocks (2^u - 1) 2^u each.
  EXPECT_EQ(m_by_definition(HypercubeSpec{1, 2, 2, 1, {}}), 12 + (12 << 4));
  EXPECT_THROW(m_by_definition(HypercubeSpec{1, 2, 1, 2, {}}), DomainError);
}

TEST(Reference, Helpers) {
  EXPECT_EQ(chi_square_scan(72), 6u);
  EXPECT_EQ(chi_square_scan(1), 1u);
  EXPECT_EQ(omega_trial(1), 0u);
  EXPECT_EQ(omega_trial(2 * 3 * 5 * 7 * 7), 4u);
  EXPECT_EQ(smallest_prime_factor(91), 7u);
  EXPECT_EQ(greatest_prime_factor(91), 13u);
  EXPECT_EQ(greatest_prime_factor(64), 2u);
  EXPECT_EQ(pascal(10, 3), 120);
  EXPECT_EQ(pascal(3, 5), 0);
  EXPECT_EQ(euclid(48, 18), 6u);
  EXPECT_EQ(euclid(0, 5), 5u);
  EXPECT_EQ(nu2_halving(96), 5u);
  EXPECT_EQ(popcount_shift(255), 8u);
  EXPECT_EQ(factorial_product(10), 3628800);
  EXPECT_EQ(power_product(0, 0), 1);
  EXPECT_EQ(power_product(3, 4), 81);
  EXPECT_EQ(floor_root_count(2, 10), 3u);
  EXPECT_EQ(floor_root_count(3, 8), 2u);
  EXPECT_EQ(g_series_naive(0, 2, 4), 15);
  EXPECT_EQ(g_series_naive(0, 5, 0), 0);
}

TEST(Reference, PascalRowsSumToPowersOfTwo) {
  for (std::uint64_t a = 0; a <= 30; ++a) {
    Natural sum = 0;
    for (std::uint64_t b = 0; b <= a; ++b) sum += pascal(a, b);
    EXPECT_EQ(sum, pow2(a));
  }
}

TEST(Reference, CheckNames) {
  EXPECT_EQ(to_string(Lemma::GreatestPrimeSystem), "greatest-prime-system");
  EXPECT_EQ(to_string(Lemma::ChiResidues), "chi-residues");
}
