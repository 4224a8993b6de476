#pragma once

#include <cstdint>
#include <string_view>

namespace cff {

inline constexpr std::uint64_t kDefaultBitBudget = 2'000'000;

/// Capacity ceilings shared by the evaluator and the closed-form routines.
struct Limits {
  std::uint64_t bit_budget = kDefaultBitBudget;

  /// Throws CapacityError naming `what` when `required_bits` exceeds the budget.
  void require(std::uint64_t required_bits, std::string_view what) const;

  /// Defaults, with CFF_BIT_BUDGET (a positive decimal) overriding the ceiling.
  static Limits from_env();
};

/// Saturating helpers for bit-count estimates that may overflow 64 bits.
std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) noexcept;

}  // namespace cff
