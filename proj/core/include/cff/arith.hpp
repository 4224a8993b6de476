#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cff {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization by trial division, primes ascending; empty for n <= 1.
std::vector<PrimePower> factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// Largest s with s^2 | n, from the factorization. Requires n >= 1.
std::uint64_t square_part_root(std::uint64_t n);

/// Number of distinct prime divisors, from the factorization.
unsigned distinct_primes(std::uint64_t n);

bool is_squarefree(std::uint64_t n);

}  // namespace cff
