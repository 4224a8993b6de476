#include "cff/arith.hpp"

#include "cff/errors.hpp"

namespace cff {

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  if (n <= 1) return out;
  for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

bool is_prime(std::uint64_t n) {
  const auto f = factorize(n);
  return f.size() == 1 && f.front().exponent == 1;
}

std::uint64_t square_part_root(std::uint64_t n) {
  if (n == 0) throw DomainError("chi(0) is undefined");
  std::uint64_t s = 1;
  for (const auto& [p, e] : factorize(n))
    for (unsigned i = 0; i < e / 2; ++i) s *= p;
  return s;
}

unsigned distinct_primes(std::uint64_t n) { return static_cast<unsigned>(factorize(n).size()); }

bool is_squarefree(std::uint64_t n) {
  for (const auto& pp : factorize(n))
    if (pp.exponent > 1) return false;
  return n >= 1;
}

}  // namespace cff
