#pragma once

// A proper divisor of a composite n from chi(n) and omega(n):
//
//   T(n) = gcd(n / chi(n), floor_root(omega(n), n)!)
//   U(n) = (2 -. chi) * gcd(n, floor_root(omega, n)!) + (1 -. (2 -. chi)) * chi
//
// chi and omega come from the selected backend; root, factorial and gcd are
// native calls inside a hybrid term.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cff/bigint.hpp"
#include "cff/closed_forms.hpp"
#include "cff/limits.hpp"
#include "cff/term.hpp"

namespace cff {

enum class Method { T, U };

std::string_view to_string(Method m);
std::optional<Method> method_from_string(std::string_view s);

struct FactorOptions {
  Backend backend = Backend::Native;  // used for chi and omega
  Limits limits{};
};

struct FactorReport {
  std::uint64_t n = 0;
  Method method = Method::T;
  Natural divisor;
  Natural cofactor;
  std::uint64_t chi = 0;
  std::uint64_t omega = 0;  // after the omega = 0 guard
  Natural root;
  Backend backend = Backend::Native;
  bool composite = false;
  bool proper = false;  // 1 < divisor < n
  std::chrono::microseconds elapsed{0};
};

/// One JSON object per report; big values as decimal strings.
std::string to_json(const FactorReport& r);

/// The two divisor terms in variables n, chi, omega (hybrid calls).
const Term& factor_term(Method m);

/// Requires n >= 2 (DomainError). Prime n is reported with composite = false.
FactorReport factor(std::uint64_t n, Method m, const FactorOptions& options = {});
FactorReport factor_T(std::uint64_t n, const FactorOptions& options = {});
FactorReport factor_U(std::uint64_t n, const FactorOptions& options = {});

struct ConjectureReport {
  std::uint64_t m = 0;
  Natural n;
  Natural conjectured;  // may be negative when the quotient is below 1
  Natural exact;
  bool defined = true;  // false when the denominator residue is 0
  bool agrees = false;
};

/// floor(((n^(2nm)+1)^(2nm+1) mod (n^(2nm^2)-n)) / ((n^(2nm)+1)^(2nm) mod (n^(2nm^2)-n)) - 1)
/// compared with floor_root(m, n). Never asserts agreement. DomainError
/// unless n > 2, bitlen(n) >= m > 1 and n is not a perfect m-th power.
ConjectureReport floor_root_conjecture(std::uint64_t m, const Natural& n, const Limits& limits = {});

/// Bits of the modulus n^(2nm^2) - n.
std::uint64_t floor_root_conjecture_bits(std::uint64_t m, std::uint64_t n) noexcept;

/// min prime <= floor_root(omega(n), n) < max prime. DomainError unless n is
/// composite and squarefree.
bool root_bound_check(std::uint64_t n);

/// Builds the witness (x, y, z, w, g, s, r, q, d) for every x in [0, n] with
/// x^m <= n, checks each square of the nine-variable equation and the cube
/// bounds, and returns the number of witnesses. Throws PropertyViolation on
/// the first failing square or bound. Requires m, n >= 1.
std::uint64_t witness_check_pow_equation(std::uint64_t m, std::uint64_t n, const Limits& limits = {});

}  // namespace cff
