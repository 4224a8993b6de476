#include "cff/bigint.hpp"

#include <limits>

#include "cff/errors.hpp"

namespace cff {

std::uint64_t bit_length(const Natural& v) {
  if (sgn(v) == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

std::uint64_t popcount(const Natural& v) {
  if (sgn(v) < 0) throw DomainError("popcount of a negative integer");
  return mpz_popcount(v.get_mpz_t());
}

std::uint64_t trailing_zeros(const Natural& v) {
  if (sgn(v) <= 0) throw DomainError("2-adic valuation needs a positive argument");
  return mpz_scan1(v.get_mpz_t(), 0);
}

Natural pow2(std::uint64_t exponent) {
  Natural r;
  mpz_setbit(r.get_mpz_t(), exponent);
  return r;
}

std::uint64_t to_u64(const Natural& v, std::string_view what) {
  if (sgn(v) < 0) throw DomainError(std::string(what) + " is negative");
  if (bit_length(v) > 64)
    throw CapacityError(std::string(what) + " does not fit in 64 bits", bit_length(v), 64);
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

Natural parse_natural(std::string_view text) {
  if (text.empty()) throw DomainError("empty number");
  for (char c : text)
    if (c < '0' || c > '9') throw DomainError("not a natural number: '" + std::string(text) + "'");
  return Natural(std::string(text), 10);
}

std::string to_decimal(const Natural& v) { return v.get_str(10); }

}  // namespace cff
