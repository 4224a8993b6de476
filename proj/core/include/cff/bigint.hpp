#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace cff {

/// Arbitrary-precision integer. Used for naturals throughout; signed values
/// only appear inside monomial coefficients and closed-form assembly.
using Natural = mpz_class;

/// Number of bits in |v|; zero has bit length 0.
std::uint64_t bit_length(const Natural& v);

/// Hamming weight of a natural.
std::uint64_t popcount(const Natural& v);

/// 2-adic valuation; requires v > 0.
std::uint64_t trailing_zeros(const Natural& v);

Natural pow2(std::uint64_t exponent);

/// Converts to uint64, throwing CapacityError if the value does not fit.
std::uint64_t to_u64(const Natural& v, std::string_view what);

/// Parses an unsigned decimal literal; throws DomainError otherwise.
Natural parse_natural(std::string_view text);

std::string to_decimal(const Natural& v);

}  // namespace cff
