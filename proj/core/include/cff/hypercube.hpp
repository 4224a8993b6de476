#pragma once

// Solution counting over a box by Hamming weight: for an exponential
// polynomial f with 0 <= f < 2^u on [0, t-1]^k, the integer
//
//   M = sum_a 2^(2u beta(a)) delta(f(a), u),   beta(a) = a_1 + a_2 t + ... + a_k t^(k-1)
//
// has HW(M) = u * (t^k + #zeros of f). M is assembled from per-monomial
// closed forms without visiting the box.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cff/bigint.hpp"
#include "cff/closed_forms.hpp"
#include "cff/limits.hpp"
#include "cff/term.hpp"

namespace cff {

/// c * v_1^x_1 ... v_k^x_k * x_1^r_1 ... x_k^r_k. `c` may be negative.
struct Monomial {
  Natural c;
  std::vector<Natural> v;
  std::vector<std::uint64_t> r;
};

struct HypercubeSpec {
  unsigned k = 1;
  std::uint64_t t = 1;
  std::uint64_t u = 1;
  Natural c0 = 0;
  std::vector<Monomial> monomials;
};

/// Throws DomainError unless k, t, u >= 1, c0 >= 0, and every monomial has k
/// bases >= 1 and k powers.
void check_shape(const HypercubeSpec& spec);

/// f at one lattice point (no range checks on the point).
Natural evaluate_polynomial(const HypercubeSpec& spec, std::span<const std::uint64_t> point);

/// t^k, throwing CapacityError if it does not fit in 64 bits.
std::uint64_t box_size(const HypercubeSpec& spec);

struct ValidationReport {
  bool ok = true;
  bool exhaustive = false;
  std::uint64_t points_checked = 0;
  std::vector<std::uint64_t> offending_point;  // empty when ok
  Natural offending_value;
};

/// Checks 0 <= f < 2^u: exhaustively when t^k <= exhaustive_limit, otherwise
/// on every corner plus `samples` seeded random points.
ValidationReport validate(const HypercubeSpec& spec, std::uint64_t exhaustive_limit = 1'000'000,
                          std::uint64_t samples = 4096, std::uint64_t seed = 0x5eed);

/// Bits of the largest intermediate in build_M.
std::uint64_t build_m_bits(const HypercubeSpec& spec);

/// M = C_k(c0) + sum of A_k(monomial); the C_k division by 2^u + 1 is
/// checked to be exact and M to be non-negative (ConsistencyError otherwise).
Natural build_M(const HypercubeSpec& spec, const Limits& limits = {});

/// HW(M)/u - t^k, checking that u divides HW(M) and the quotient is >= t^k.
std::uint64_t count_from_M(const HypercubeSpec& spec, const Natural& m);

/// Zeros of f in the box via build_M. The caller vouches for 0 <= f < 2^u.
std::uint64_t count_solutions(const HypercubeSpec& spec, const Limits& limits = {});

// ---- symbolic form ------------------------------------------------------------

struct SymbolicMonomial {
  bool negative = false;
  Term magnitude = 1;
  std::vector<Term> bases;
  std::vector<std::uint64_t> powers;
};

struct SymbolicSpec {
  unsigned k = 1;
  Term t = 1;
  Term u = 1;
  Term c0 = 0;
  std::vector<SymbolicMonomial> monomials;
};

SymbolicSpec to_symbolic(const HypercubeSpec& spec);

/// M as a term: (2^(2u t^k) -. 1) + negative-coefficient parts, monus the
/// c0 share of the free term and the positive-coefficient parts.
Term m_term(const SymbolicSpec& spec);

// ---- chi and omega ------------------------------------------------------------

/// (x^2 - n y)^2 on [0, n-1]^2 with u = n + 4; its zero count is chi(n).
HypercubeSpec chi_spec(std::uint64_t n);
/// (x^2 - 4n y - 1)^2 on [0, 4n-1]^2 with u = 4n + 4; its zero count is 2^(omega(n)+1).
HypercubeSpec omega_spec(std::uint64_t n);

/// The same constructions with n left as the variable "n".
SymbolicSpec chi_symbolic();
SymbolicSpec omega_symbolic();

struct CountDetail {
  std::uint64_t value = 0;           // chi(n) or omega(n)
  std::uint64_t solutions = 0;       // zeros counted in the box
  std::uint64_t m_bits = 0;          // bit length of M, 0 for Native
  std::uint64_t hamming_weight = 0;  // HW(M), 0 for Native
};

/// Largest s with s^2 | n. FullTerm evaluates the M term, Layered builds M
/// from closed forms, Native factors n.
std::uint64_t chi(std::uint64_t n, Backend backend, const Limits& limits = {});
CountDetail chi_detail(std::uint64_t n, Backend backend, const Limits& limits = {});

/// Number of distinct primes dividing n; the valuation of the solution
/// count is taken with the nu2 term (native gcd sub-call).
std::uint64_t omega(std::uint64_t n, Backend backend, const Limits& limits = {});
CountDetail omega_detail(std::uint64_t n, Backend backend, const Limits& limits = {});

/// JSON with fields k, t, u, c0, monomials[{c, v[], r[]}]. Big values may be
/// given as JSON integers or decimal strings.
HypercubeSpec spec_from_json(std::string_view text);
std::string spec_to_json(const HypercubeSpec& spec);

}  // namespace cff
