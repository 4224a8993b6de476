#include "cff/limits.hpp"

#include <cstdlib>
#include <limits>
#include <string>

#include "cff/errors.hpp"

namespace cff {

void Limits::require(std::uint64_t required_bits, std::string_view what) const {
  if (required_bits > bit_budget) throw CapacityError(std::string(what), required_bits, bit_budget);
}

Limits Limits::from_env() {
  Limits limits;
  if (const char* raw = std::getenv("CFF_BIT_BUDGET"); raw != nullptr && *raw != '\0') {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (end == nullptr || *end != '\0' || value == 0 || raw[0] == '-')
      throw DomainError("CFF_BIT_BUDGET must be a positive decimal integer, got '" + std::string(raw) + "'");
    limits.bit_budget = value;
  }
  return limits;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) noexcept {
  const std::uint64_t s = a + b;
  return s < a ? std::numeric_limits<std::uint64_t>::max() : s;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) noexcept {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

}  // namespace cff
