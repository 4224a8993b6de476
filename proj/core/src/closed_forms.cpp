#include "cff/closed_forms.hpp"

#include <numeric>

#include <algorithm>
#include <cctype>

#include "cff/errors.hpp"
#include "g_series_table.hpp"

namespace cff {

std::string_view to_string(Backend b) {
  switch (b) {
    case Backend::FullTerm: return "fullterm";
    case Backend::Layered: return "layered";
    case Backend::Native: return "native";
  }
  return "?";
}

std::optional<Backend> backend_from_string(std::string_view s) {
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "full" || lower == "term" || lower == "fullterm") return Backend::FullTerm;
  if (lower == "layered") return Backend::Layered;
  if (lower == "native") return Backend::Native;
  return std::nullopt;
}

namespace {

struct FormulaName {
  FormulaId id;
  std::string_view name;
};

constexpr FormulaName kNames[] = {
    {FormulaId::Hw, "hw"},           {FormulaId::Nu2, "nu2"},          {FormulaId::GcdTerm, "gcd"},
    {FormulaId::Binom1, "binom1"},   {FormulaId::Binom2, "binom2"},    {FormulaId::FactorialTerm, "factorial"},
    {FormulaId::Delta, "delta"},     {FormulaId::GSeries, "gseries"},  {FormulaId::PowLemma, "pow"},
    {FormulaId::Chi, "chi"},         {FormulaId::Omega, "omega"},
};

Natural nat(std::uint64_t v) { return Natural(static_cast<unsigned long>(v)); }

Natural ipow(const Natural& base, std::uint64_t e) {
  Natural r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Low `bits` bits of v, i.e. v mod 2^bits.
Natural low_bits(const Natural& v, std::uint64_t bits) {
  Natural r;
  mpz_tdiv_r_2exp(r.get_mpz_t(), v.get_mpz_t(), bits);
  return r;
}

Natural floor_div(const Natural& a, const Natural& b) {
  Natural q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Natural exact_div(const Natural& a, const Natural& b, std::string_view what) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw ConsistencyError(std::string(what) + ": division is not exact");
  Natural q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::string_view formula_name(FormulaId id) {
  for (const auto& [fid, name] : kNames)
    if (fid == id) return name;
  return "?";
}

std::optional<FormulaId> formula_from_name(std::string_view name) {
  for (const auto& [fid, n] : kNames)
    if (n == name) return fid;
  if (name == "binom") return FormulaId::Binom1;
  if (name == "g") return FormulaId::GSeries;
  return std::nullopt;
}

std::vector<std::string> formula_params(FormulaId id) {
  switch (id) {
    case FormulaId::Hw:
    case FormulaId::Nu2:
    case FormulaId::FactorialTerm:
    case FormulaId::Chi:
    case FormulaId::Omega:
      return {"n"};
    case FormulaId::GcdTerm:
    case FormulaId::Binom1:
    case FormulaId::Binom2:
    case FormulaId::Delta:
      return {"a", "b"};
    case FormulaId::GSeries:
      return {"q", "t"};
    case FormulaId::PowLemma:
      return {"x", "m"};
  }
  return {};
}

// ---- bit estimates -----------------------------------------------------------

std::uint64_t gcd_term_bits(std::uint64_t a, std::uint64_t b) noexcept {
  const std::uint64_t ab = sat_mul(a, b);
  return sat_add(sat_mul(ab, sat_add(ab, sat_add(a, b))), 1);
}

std::uint64_t binom1_bits(std::uint64_t a) noexcept { return sat_add(sat_mul(a, a), 1); }

std::uint64_t binom2_bits(std::uint64_t a, std::uint64_t b) noexcept {
  const std::uint64_t a1 = sat_add(a, 1);
  return sat_add(sat_mul(sat_mul(2, sat_add(a, 2)), sat_add(sat_mul(a1, a1), sat_add(b, 1))), 1);
}

std::uint64_t nu2_term_bits(std::uint64_t n) noexcept {
  // gcd(n, 2^n) through the gcd term dominates.
  const std::uint64_t two_n = n >= 63 ? UINT64_MAX : (std::uint64_t{1} << n);
  return std::max(gcd_term_bits(n, two_n), sat_mul(2, sat_add(n, 2)));
}

std::uint64_t factorial_term_bits(std::uint64_t n, Backend backend) noexcept {
  const std::uint64_t outer = sat_add(sat_mul(3, sat_mul(n, sat_mul(n, n))), 1);
  switch (backend) {
    case Backend::Native:
      return sat_add(sat_mul(n, bit_length(nat(std::max<std::uint64_t>(n, 1)))), 1);
    case Backend::Layered:
      return outer;
    case Backend::FullTerm: {
      const std::uint64_t e = sat_mul(3, sat_mul(n, n));  // a = 2^e
      const std::uint64_t a = e >= 63 ? UINT64_MAX : (std::uint64_t{1} << e);
      return std::max(outer, binom1_bits(a));
    }
  }
  return outer;
}

std::uint64_t pow_lemma_bits(std::uint64_t x, std::uint64_t m) noexcept {
  return sat_add(sat_mul(3, sat_mul(sat_mul(m, m), x)), 1);
}

// ---- value level -----------------------------------------------------------

std::uint64_t hw(const Natural& n) { return popcount(n); }

std::uint64_t hw_kummer(std::uint64_t n, const Limits& limits) {
  // binom1 is outside its window at a = 0; binom(0, 0) = 1 has valuation 0.
  if (n == 0) return 0;
  if (n > UINT64_MAX / 2) throw CapacityError("hw_kummer", UINT64_MAX, limits.bit_budget);
  return trailing_zeros(binom1(2 * n, n, limits));
}

std::uint64_t nu2(const Natural& n, Backend backend, const Limits& limits) {
  if (sgn(n) <= 0) throw DomainError("nu2(0) is undefined");
  if (backend == Backend::Native) return trailing_zeros(n);
  if (backend == Backend::FullTerm) {
    limits.require(nu2_term_bits(bit_length(n) > 64 ? UINT64_MAX : to_u64(n, "n")), "nu2 term");
  }
  static const Term pure = emit_term({FormulaId::Nu2}, EmitMode::Pure);
  static const Term hybrid = emit_term({FormulaId::Nu2}, EmitMode::Hybrid);
  const Natural v = evaluate(backend == Backend::FullTerm ? pure : hybrid, Env{{"n", n}}, limits);
  return to_u64(v, "nu2");
}

Natural gcd_term(std::uint64_t a, std::uint64_t b, const Limits& limits) {
  if (a == 0 || b == 0) throw DomainError("gcd term needs a, b >= 1");
  limits.require(gcd_term_bits(a, b), "gcd term");
  const std::uint64_t ab = a * b;
  const Natural numerator = pow2(ab * (ab + a + b));
  const Natural denominator = (pow2(a * a * b) - 1) * (pow2(a * b * b) - 1);
  const Natural block = low_bits(floor_div(numerator, denominator), ab);
  return block > 0 ? Natural(block - 1) : Natural(0);
}

bool gcd_term_in_window(std::uint64_t a, std::uint64_t b) noexcept {
  // The low ab-bit block holds gcd(a, b) + 1.
  return a >= 1 && b >= 1 && (a * b >= 64 || std::gcd(a, b) + 1 < (std::uint64_t{1} << (a * b)));
}

bool binom1_in_window(std::uint64_t a, std::uint64_t b) noexcept { return b <= a && a >= 1; }

Natural binom1(std::uint64_t a, std::uint64_t b, const Limits& limits) {
  if (b > a) throw DomainError("binom1 needs b <= a");
  limits.require(binom1_bits(a), "binom1");
  const Natural power = ipow(pow2(a) + 1, a);
  return low_bits(power >> static_cast<mp_bitcnt_t>(a * b), a);
}

Natural binom2(std::uint64_t a, std::uint64_t b, const Limits& limits) {
  if (b > a) throw DomainError("binom2 needs b <= a");
  limits.require(binom2_bits(a, b), "binom2");
  const std::uint64_t block = 2 * (a + 2);
  const Natural numerator = pow2(block * ((a + 1) * (a + 1) + b + 1));
  const Natural denominator = pow2(block * (a + 2)) - pow2(block) - 1;
  return low_bits(floor_div(numerator, denominator), block);
}

Natural factorial_term(std::uint64_t n, Backend backend, const Limits& limits) {
  limits.require(factorial_term_bits(n, backend), "factorial term");
  if (backend == Backend::Native) {
    Natural r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
  }
  const std::uint64_t inner_exp = 3 * n * n;  // 8^(n^2) = 2^(3 n^2)
  Natural binomial;
  if (backend == Backend::FullTerm) {
    binomial = binom1(std::uint64_t{1} << inner_exp, n, limits);
  } else {
    mpz_bin_ui(binomial.get_mpz_t(), pow2(inner_exp).get_mpz_t(), n);
  }
  if (sgn(binomial) == 0) return 0;
  return floor_div(pow2(3 * n * n * n), binomial);
}

Natural delta(const Natural& a, std::uint64_t b) {
  if (sgn(a) < 0 || a >= pow2(b)) throw DomainError("delta(a, b) needs 0 <= a < 2^b");
  const Natural p = pow2(b);
  return (p - 1) * (p - a + 1);
}

bool g_series_has_closed_form(unsigned r) noexcept { return r == 0 || detail::g_closed_form(r) != nullptr; }

namespace {

Natural g_series_sum(unsigned r, const Natural& q, std::uint64_t t) {
  Natural sum = 0, qj = 1;
  for (std::uint64_t j = 0; j < t; ++j) {
    sum += ipow(nat(j), r) * qj;
    qj *= q;
  }
  return sum;
}

Natural g_series_q_one(unsigned r, std::uint64_t t) {
  const Natural tt = nat(t);
  switch (r) {
    case 0: return tt;
    case 1: return tt * (tt - 1) / 2;
    case 2: return tt * (tt - 1) * (2 * tt - 1) / 6;
    case 4: {
      if (t == 0) return 0;
      const Natural m = tt - 1;
      return m * (m + 1) * (2 * m + 1) * (3 * m * m + 3 * m - 1) / 30;
    }
    default: return g_series_sum(r, 1, t);
  }
}

}  // namespace

Natural g_series(unsigned r, const Natural& q, std::uint64_t t, const Limits& limits) {
  if (sgn(q) <= 0) throw DomainError("G_r(q, t) needs q >= 1");
  if (t == 0) return 0;
  const std::uint64_t qbits = bit_length(q);
  limits.require(sat_mul(sat_add(t, r + 2), qbits), "G series");
  if (!g_series_has_closed_form(r)) return g_series_sum(r, q, t);
  if (q == 1) return g_series_q_one(r, t);
  if (r == 0) return exact_div(ipow(q, t) - 1, q - 1, "G_0");

  const auto* form = detail::g_closed_form(r);
  const std::uint64_t t1 = t - 1;
  const Natural q_t1 = ipow(q, t1);
  Natural bracket = 0;
  for (const auto& sp : form->shifted) {
    Natural coeff = 0, t1_pow = 1;
    for (long c : sp.poly) {
      coeff += c * t1_pow;
      t1_pow *= nat(t1);
    }
    bracket += coeff * q_t1 * ipow(q, sp.shift);
  }
  for (const auto& cp : form->constants) bracket += cp.coeff * ipow(q, cp.power);
  bracket *= ipow(q, form->lead);
  return exact_div(bracket, ipow(q - 1, form->denominator), "G series");
}

Natural pow_lemma(const Natural& x, std::uint64_t m, const Limits& limits) {
  if (m == 0) throw DomainError("x^m identity needs m >= 1");
  if (sgn(x) < 0) throw DomainError("x must be natural");
  const std::uint64_t xv = to_u64(x, "x");
  limits.require(pow_lemma_bits(xv, m), "x^m identity");
  const Natural big = pow2(3 * m * m * xv);
  const Natural top = pow2(3 * m * xv);
  const Natural modulus = top > x ? Natural(top - x) : Natural(0);
  if (sgn(modulus) == 0) return big;
  Natural r;
  mpz_fdiv_r(r.get_mpz_t(), big.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

}  // namespace cff
