#include "cff/roots.hpp"

#include "cff/errors.hpp"

namespace cff {

Natural floor_root(std::uint64_t m, const Natural& n) {
  if (m == 0) throw DomainError("the 0-th root is undefined");
  if (sgn(n) < 0) throw DomainError("floor_root of a negative number");
  if (m == 1 || n <= 1) return n;
  // n < 2^bits, so the root is below 2^ceil(bits/m).
  const std::uint64_t bits = bit_length(n);
  Natural lo = 1;
  Natural hi = pow2((bits + m - 1) / m);  // exclusive upper bound
  Natural mid, p;
  while (hi - lo > 1) {
    mid = (lo + hi) >> 1;
    mpz_pow_ui(p.get_mpz_t(), mid.get_mpz_t(), m);
    if (p <= n)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

bool is_perfect_power(std::uint64_t m, const Natural& n) {
  const Natural r = floor_root(m, n);
  Natural p;
  mpz_pow_ui(p.get_mpz_t(), r.get_mpz_t(), m);
  return p == n;
}

}  // namespace cff
