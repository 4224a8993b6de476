#pragma once

// Brute-force ground truth. Nothing here uses the closed forms, the term
// evaluator or the hypercube counter.

#include <cstdint>
#include <string_view>
#include <vector>

#include "cff/bigint.hpp"
#include "cff/hypercube.hpp"

namespace cff::oracle {

enum class Lemma { SmallestDivisorSystem, GreatestPrimeSystem, ChiResidues, OmegaResidues };

std::string_view to_string(Lemma l);

struct CountReport {
  std::uint64_t n = 0;
  Lemma lemma = Lemma::SmallestDivisorSystem;
  std::uint64_t count = 0;
  std::uint64_t predicted = 0;
  bool agrees = false;
};

/// |{a in [0, n-1] : n | a^2}|. Requires n >= 1.
std::uint64_t chi_residue_count(std::uint64_t n);

/// |{a in [0, 4n-1] : a^2 = 1 mod 4n}|. Requires n >= 1.
std::uint64_t omega_residue_count(std::uint64_t n);

/// Tuples (a, b, c, d, e, f) with (a+b+2)c = n, d (a+b+1)! + 1 = e n, d + f = n.
/// Only (a, b) is enumerated; c, d, e, f are checked for existence and
/// counted per feasible a + b. RangeError outside [2, 24].
CountReport smallest_divisor_system_count(std::uint64_t n);

/// Tuples (a, b, c, d, e) with (a+b+2)c = n, (a+b+1)! + 1 = d (a+b+2),
/// ((a+b+2)!)^n = n e. RangeError outside [2, 20].
CountReport greatest_prime_system_count(std::uint64_t n);

/// Zeros of f over [0, t-1]^k by direct evaluation. RangeError if t^k > 10^7.
std::uint64_t enumerate_box_zeros(const HypercubeSpec& spec);

/// M = sum over the box of 2^(2u beta(a)) delta(f(a), u), point by point.
/// RangeError if t^k > 10^5; DomainError if some f(a) is outside [0, 2^u).
Natural m_by_definition(const HypercubeSpec& spec);

// ---- reference implementations --------------------------------------------

/// Largest s with s^2 | n, scanning s downward from floor(sqrt(n)).
std::uint64_t chi_square_scan(std::uint64_t n);
/// Distinct primes of n by trial division.
std::uint64_t omega_trial(std::uint64_t n);
std::uint64_t smallest_prime_factor(std::uint64_t n);
std::uint64_t greatest_prime_factor(std::uint64_t n);
/// binom(a, b) from Pascal's triangle.
Natural pascal(std::uint64_t a, std::uint64_t b);
std::uint64_t euclid(std::uint64_t a, std::uint64_t b);
/// 2-adic valuation by repeated halving. Requires n >= 1.
std::uint64_t nu2_halving(Natural n);
/// Hamming weight by shifting.
std::uint64_t popcount_shift(Natural n);
Natural factorial_product(std::uint64_t n);
/// x^m by repeated multiplication; 0^0 = 1.
Natural power_product(std::uint64_t x, std::uint64_t m);
/// floor(n^(1/m)) by counting x with x^m <= n. Requires m >= 1.
std::uint64_t floor_root_count(std::uint64_t m, std::uint64_t n);
/// sum_{j < t} j^r q^j term by term; 0^0 = 1.
Natural g_series_naive(unsigned r, const Natural& q, std::uint64_t t);

}  // namespace cff::oracle
