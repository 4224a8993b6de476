#pragma once

#include <cstdint>

#include "cff/bigint.hpp"

namespace cff {

/// r with r^m <= n < (r+1)^m, by binary search on exact integer powers.
/// Throws DomainError for m = 0.
Natural floor_root(std::uint64_t m, const Natural& n);

/// True iff n = k^m for some natural k. Requires m >= 1.
bool is_perfect_power(std::uint64_t m, const Natural& n);

}  // namespace cff
