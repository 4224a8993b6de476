#pragma once

// Value-level implementations of the number-theoretic building blocks
// (Hamming weight, 2-adic valuation, gcd, binomials, factorial, the block
// encoder delta, generalized geometric series, the x^m identity) together
// with their term emitters.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cff/bigint.hpp"
#include "cff/limits.hpp"
#include "cff/term.hpp"

namespace cff {

/// How a formula is evaluated.
///   FullTerm - the closed form itself, exactly, with every subformula expanded.
///   Layered  - the closed form, with named native sub-calls where the fully
///              expanded subformula is out of reach.
///   Native   - a direct algorithm, no closed form involved.
enum class Backend { FullTerm, Layered, Native };

std::string_view to_string(Backend b);
/// Accepts "full", "term", "fullterm", "layered", "native".
std::optional<Backend> backend_from_string(std::string_view s);

enum class FormulaId { Hw, Nu2, GcdTerm, Binom1, Binom2, FactorialTerm, Delta, GSeries, PowLemma, Chi, Omega };

struct Formula {
  FormulaId id;
  unsigned r = 0;  // series order, GSeries only
};

std::string_view formula_name(FormulaId id);
std::optional<FormulaId> formula_from_name(std::string_view name);
/// Variable names the emitted term of `id` is written in.
std::vector<std::string> formula_params(FormulaId id);

// ---- value level -----------------------------------------------------------

std::uint64_t hw(const Natural& n);

/// HW(n) as the 2-adic valuation of binom(2n, n), the binomial taken from binom1.
std::uint64_t hw_kummer(std::uint64_t n, const Limits& limits = {});

/// 2-adic valuation. n = 0 is a DomainError on every backend.
std::uint64_t nu2(const Natural& n, Backend backend, const Limits& limits = {});

/// gcd through floor(2^(ab(ab+a+b)) / ((2^(a^2 b)-1)(2^(a b^2)-1))) mod 2^(ab), monus 1.
/// Requires a, b >= 1. Agrees with gcd(a, b) exactly when gcd(a, b) + 1 < 2^(ab),
/// i.e. everywhere except a = b = 1, where the block overflows and the value is 0.
Natural gcd_term(std::uint64_t a, std::uint64_t b, const Limits& limits = {});
bool gcd_term_in_window(std::uint64_t a, std::uint64_t b) noexcept;

/// floor((2^a+1)^a / 2^(ab)) mod 2^a. Agrees with binom(a, b) exactly when
/// binom(a, b) < 2^a, i.e. for a >= 1; see binom1_in_window.
Natural binom1(std::uint64_t a, std::uint64_t b, const Limits& limits = {});
bool binom1_in_window(std::uint64_t a, std::uint64_t b) noexcept;

/// floor(2^(2(a+2)((a+1)^2+b+1)) / (2^(2(a+2)^2) - 2^(2(a+2)) - 1)) mod 2^(2(a+2)).
Natural binom2(std::uint64_t a, std::uint64_t b, const Limits& limits = {});

/// n! = floor(8^(n^3) / binom(8^(n^2), n)); FullTerm takes the binomial from
/// binom1, Layered from a native binomial, Native is the iterated product.
Natural factorial_term(std::uint64_t n, Backend backend, const Limits& limits = {});

/// (2^b - 1)(2^b - a + 1); requires a < 2^b.
Natural delta(const Natural& a, std::uint64_t b);

/// G_r(q, t) = sum_{j<t} j^r q^j. Closed forms for r in {0,1,2,4}, summation otherwise.
Natural g_series(unsigned r, const Natural& q, std::uint64_t t, const Limits& limits = {});
bool g_series_has_closed_form(unsigned r) noexcept;

/// x^m as 2^(3 m^2 x) mod (2^(3mx) -. x). Requires m >= 1.
Natural pow_lemma(const Natural& x, std::uint64_t m, const Limits& limits = {});

// Dominant intermediate sizes, in bits, checked against the budget up front.
std::uint64_t gcd_term_bits(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t binom1_bits(std::uint64_t a) noexcept;
std::uint64_t binom2_bits(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t nu2_term_bits(std::uint64_t n) noexcept;
std::uint64_t factorial_term_bits(std::uint64_t n, Backend backend) noexcept;
std::uint64_t pow_lemma_bits(std::uint64_t x, std::uint64_t m) noexcept;

// ---- emission ----------------------------------------------------------------

enum class EmitMode {
  Pure,    // only the term language
  Hybrid,  // reserved native calls where the pure subterm is infeasible
};

Term binom1_term(const Term& a, const Term& b);
Term binom2_term(const Term& a, const Term& b);
Term gcd_term_term(const Term& a, const Term& b);
Term nu2_term(const Term& n, EmitMode mode);
Term hw_term(const Term& n, EmitMode mode);
Term factorial_term_term(const Term& n);
Term delta_term(const Term& a, const Term& b);
/// Closed form of G_r; with `q_may_be_one` the q = 1 branch is folded in
/// through monus selectors and the a / 0 = 0 convention.
Term g_series_term(unsigned r, const Term& q, const Term& t, bool q_may_be_one);
Term pow_lemma_term(const Term& x, const Term& m);

/// Term for `f` over the variables of formula_params(f.id). Chi and Omega
/// return the hypercube integer M whose Hamming weight encodes the count.
Term emit_term(Formula f, EmitMode mode = EmitMode::Pure);

/// Value-level counterpart of emit_term. For Chi and Omega this is M itself.
Natural formula_value(Formula f, const Env& params, const Limits& limits = {});

}  // namespace cff
