#include "cff/hypercube.hpp"

#include <random>

#include "cff/arith.hpp"
#include "cff/errors.hpp"

namespace cff {

namespace {

Natural nat(std::uint64_t v) { return Natural(static_cast<unsigned long>(v)); }

Natural ipow(const Natural& base, std::uint64_t e) {
  Natural r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (base != 0 && r > UINT64_MAX / base) throw CapacityError("t^k", UINT64_MAX, 64);
    r *= base;
  }
  return r;
}

}  // namespace

void check_shape(const HypercubeSpec& spec) {
  if (spec.k == 0) throw DomainError("hypercube dimension k must be >= 1");
  if (spec.t == 0) throw DomainError("hypercube side t must be >= 1");
  if (spec.u == 0) throw DomainError("hypercube bit bound u must be >= 1");
  if (sgn(spec.c0) < 0) throw DomainError("free term c0 must be natural");
  for (std::size_t i = 0; i < spec.monomials.size(); ++i) {
    const auto& m = spec.monomials[i];
    if (m.v.size() != spec.k || m.r.size() != spec.k)
      throw DomainError("monomial " + std::to_string(i) + " does not have k bases and k powers");
    for (const Natural& v : m.v)
      if (v < 1) throw DomainError("monomial " + std::to_string(i) + " has an exponential base < 1");
  }
}

std::uint64_t box_size(const HypercubeSpec& spec) { return checked_pow(spec.t, spec.k); }

Natural evaluate_polynomial(const HypercubeSpec& spec, std::span<const std::uint64_t> point) {
  Natural f = spec.c0;
  for (const auto& m : spec.monomials) {
    Natural term = m.c;
    for (unsigned i = 0; i < spec.k; ++i) {
      term *= ipow(m.v[i], point[i]);
      term *= ipow(nat(point[i]), m.r[i]);
    }
    f += term;
  }
  return f;
}

ValidationReport validate(const HypercubeSpec& spec, std::uint64_t exhaustive_limit, std::uint64_t samples,
                          std::uint64_t seed) {
  check_shape(spec);
  ValidationReport report;
  const Natural bound = pow2(spec.u);
  std::vector<std::uint64_t> point(spec.k, 0);

  auto check = [&]() {
    ++report.points_checked;
    Natural f = evaluate_polynomial(spec, point);
    if (sgn(f) < 0 || f >= bound) {
      report.ok = false;
      report.offending_point = point;
      report.offending_value = std::move(f);
      return false;
    }
    return true;
  };

  std::uint64_t total = UINT64_MAX;
  try {
    total = box_size(spec);
  } catch (const CapacityError&) {
  }

  if (total <= exhaustive_limit) {
    report.exhaustive = true;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t rest = idx;
      for (unsigned i = 0; i < spec.k; ++i) {
        point[i] = rest % spec.t;
        rest /= spec.t;
      }
      if (!check()) return report;
    }
    return report;
  }

  if (spec.k < 32) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << spec.k); ++mask) {
      for (unsigned i = 0; i < spec.k; ++i) point[i] = (mask >> i) & 1 ? spec.t - 1 : 0;
      if (!check()) return report;
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coord(0, spec.t - 1);
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (auto& x : point) x = coord(rng);
    if (!check()) return report;
  }
  return report;
}

std::uint64_t build_m_bits(const HypercubeSpec& spec) {
  const std::uint64_t two_u = sat_mul(2, spec.u);
  std::uint64_t tk = UINT64_MAX;
  try {
    tk = box_size(spec);
  } catch (const CapacityError&) {
  }
  std::uint64_t worst = sat_add(sat_mul(two_u, tk), sat_add(spec.u, 2));
  for (const auto& m : spec.monomials) {
    std::uint64_t product = sat_add(spec.u, bit_length(m.c));
    std::uint64_t t_pow = 1;
    for (unsigned i = 0; i < spec.k && i < m.v.size() && i < m.r.size(); ++i) {
      const std::uint64_t qbits = sat_add(sat_mul(two_u, t_pow), bit_length(m.v[i]));
      // Largest power of q inside the closed form, and the size of G itself.
      worst = std::max(worst, sat_mul(sat_add(spec.t, sat_add(m.r[i], 2)), qbits));
      product = sat_add(product, sat_mul(sat_add(spec.t, m.r[i]), qbits));
      t_pow = sat_mul(t_pow, spec.t);
    }
    worst = std::max(worst, product);
  }
  return worst;
}

Natural build_M(const HypercubeSpec& spec, const Limits& limits) {
  check_shape(spec);
  limits.require(build_m_bits(spec), "hypercube M");
  const std::uint64_t tk = box_size(spec);
  const Natural two_u = pow2(spec.u);

  const Natural free_numerator = (two_u - spec.c0 + 1) * (pow2(2 * spec.u * tk) - 1);
  const Natural free_denominator = two_u + 1;
  if (!mpz_divisible_p(free_numerator.get_mpz_t(), free_denominator.get_mpz_t()))
    throw ConsistencyError("free-term division by 2^u + 1 is not exact");
  Natural m;
  mpz_divexact(m.get_mpz_t(), free_numerator.get_mpz_t(), free_denominator.get_mpz_t());

  for (const auto& mono : spec.monomials) {
    Natural part = -(two_u - 1) * mono.c;
    std::uint64_t t_pow = 1;
    for (unsigned i = 0; i < spec.k; ++i) {
      const Natural q = pow2(2 * spec.u * t_pow) * mono.v[i];
      part *= g_series(static_cast<unsigned>(mono.r[i]), q, spec.t, limits);
      t_pow *= spec.t;
    }
    m += part;
  }
  if (sgn(m) < 0) throw ConsistencyError("hypercube M is negative; the bound 0 <= f < 2^u does not hold");
  return m;
}

std::uint64_t count_from_M(const HypercubeSpec& spec, const Natural& m) {
  const std::uint64_t weight = popcount(m);
  if (weight % spec.u != 0)
    throw ConsistencyError("u = " + std::to_string(spec.u) + " does not divide HW(M) = " + std::to_string(weight));
  const std::uint64_t blocks = weight / spec.u;
  const std::uint64_t tk = box_size(spec);
  if (blocks < tk) throw ConsistencyError("HW(M)/u is smaller than the box size");
  return blocks - tk;
}

std::uint64_t count_solutions(const HypercubeSpec& spec, const Limits& limits) {
  return count_from_M(spec, build_M(spec, limits));
}

// ---- symbolic -----------------------------------------------------------------

SymbolicSpec to_symbolic(const HypercubeSpec& spec) {
  check_shape(spec);
  SymbolicSpec out;
  out.k = spec.k;
  out.t = Term(spec.t);
  out.u = Term(spec.u);
  out.c0 = Term::constant(spec.c0);
  for (const auto& m : spec.monomials) {
    SymbolicMonomial sm;
    sm.negative = sgn(m.c) < 0;
    sm.magnitude = Term::constant(abs(m.c));
    for (const Natural& v : m.v) sm.bases.push_back(Term::constant(v));
    sm.powers = m.r;
    out.monomials.push_back(std::move(sm));
  }
  return out;
}

namespace {

bool is_literal(const Term& t, unsigned long v) { return t.op() == Op::Const && t.value() == v; }

Term power_of(const Term& base, std::uint64_t e) { return e == 1 ? base : pow(base, Term(e)); }

Term sum_of(const std::vector<Term>& parts) {
  if (parts.empty()) return 0;
  Term acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = acc + parts[i];
  return acc;
}

}  // namespace

Term m_term(const SymbolicSpec& spec) {
  if (spec.k == 0) throw DomainError("hypercube dimension k must be >= 1");
  const Term two_u = pow2(spec.u);
  const Term block = Term(2) * spec.u;
  const Term all_blocks = monus(pow2(block * power_of(spec.t, spec.k)), 1);
  const Term mersenne_u = monus(two_u, 1);

  std::vector<Term> positive{all_blocks};
  std::vector<Term> negative;
  if (!is_literal(spec.c0, 0)) {
    const Term share = all_blocks / (two_u + 1);
    negative.push_back(is_literal(spec.c0, 1) ? share : spec.c0 * share);
  }

  std::vector<Term> ratios;
  for (unsigned i = 0; i < spec.k; ++i) ratios.push_back(pow2(i == 0 ? block : block * power_of(spec.t, i)));

  for (const auto& mono : spec.monomials) {
    if (mono.bases.size() != spec.k || mono.powers.size() != spec.k)
      throw DomainError("symbolic monomial does not have k bases and k powers");
    Term part = is_literal(mono.magnitude, 1) ? mersenne_u : mono.magnitude * mersenne_u;
    for (unsigned i = 0; i < spec.k; ++i) {
      const Term q = is_literal(mono.bases[i], 1) ? ratios[i] : ratios[i] * mono.bases[i];
      part = part * g_series_term(static_cast<unsigned>(mono.powers[i]), q, spec.t, false);
    }
    (mono.negative ? positive : negative).push_back(std::move(part));
  }
  return monus(sum_of(positive), sum_of(negative));
}

// ---- chi and omega ------------------------------------------------------------

namespace {

Monomial mono2(Natural c, std::uint64_t rx, std::uint64_t ry) { return Monomial{std::move(c), {1, 1}, {rx, ry}}; }

HypercubeSpec quadratic_residue_spec(std::uint64_t side, unsigned long c0, bool shifted) {
  HypercubeSpec spec;
  spec.k = 2;
  spec.t = side;
  spec.u = side + 4;
  spec.c0 = c0;
  const Natural s = nat(side);
  spec.monomials.push_back(mono2(1, 4, 0));
  if (shifted) spec.monomials.push_back(mono2(-2, 2, 0));
  spec.monomials.push_back(mono2(-2 * s, 2, 1));
  spec.monomials.push_back(mono2(s * s, 0, 2));
  if (shifted) spec.monomials.push_back(mono2(2 * s, 0, 1));
  return spec;
}

SymbolicSpec quadratic_residue_symbolic(const Term& side, bool shifted) {
  SymbolicSpec spec;
  spec.k = 2;
  spec.t = side;
  spec.u = side + 4;
  spec.c0 = shifted ? 1 : 0;
  auto mono = [](bool negative, Term magnitude, std::uint64_t rx, std::uint64_t ry) {
    return SymbolicMonomial{negative, std::move(magnitude), {1, 1}, {rx, ry}};
  };
  spec.monomials.push_back(mono(false, 1, 4, 0));
  if (shifted) spec.monomials.push_back(mono(true, 2, 2, 0));
  spec.monomials.push_back(mono(true, Term(2) * side, 2, 1));
  spec.monomials.push_back(mono(false, side * side, 0, 2));
  if (shifted) spec.monomials.push_back(mono(false, Term(2) * side, 0, 1));
  return spec;
}

const Term& chi_m_term() {
  static const Term t = m_term(chi_symbolic());
  return t;
}

const Term& omega_m_term() {
  static const Term t = m_term(omega_symbolic());
  return t;
}

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw DomainError(std::string(what) + "(0) is undefined");
}

}  // namespace

HypercubeSpec chi_spec(std::uint64_t n) {
  require_positive(n, "chi");
  return quadratic_residue_spec(n, 0, false);
}

HypercubeSpec omega_spec(std::uint64_t n) {
  require_positive(n, "omega");
  if (n > UINT64_MAX / 4 - 4) throw CapacityError("omega spec", UINT64_MAX, 64);
  return quadratic_residue_spec(4 * n, 1, true);
}

SymbolicSpec chi_symbolic() { return quadratic_residue_symbolic(Term::var("n"), false); }

SymbolicSpec omega_symbolic() { return quadratic_residue_symbolic(Term(4) * Term::var("n"), true); }

namespace {

CountDetail hypercube_detail(const HypercubeSpec& spec, const Term& term, std::uint64_t n, Backend backend,
                             const Limits& limits) {
  CountDetail d;
  Natural m;
  if (backend == Backend::FullTerm) {
    limits.require(build_m_bits(spec), "hypercube M term");
    m = evaluate(term, Env{{"n", nat(n)}}, limits);
  } else {
    m = build_M(spec, limits);
  }
  d.m_bits = bit_length(m);
  d.hamming_weight = popcount(m);
  d.solutions = count_from_M(spec, m);
  return d;
}

}  // namespace

CountDetail chi_detail(std::uint64_t n, Backend backend, const Limits& limits) {
  require_positive(n, "chi");
  if (backend == Backend::Native) {
    const std::uint64_t s = square_part_root(n);
    return {s, s, 0, 0};
  }
  CountDetail d = hypercube_detail(chi_spec(n), chi_m_term(), n, backend, limits);
  d.value = d.solutions;
  return d;
}

std::uint64_t chi(std::uint64_t n, Backend backend, const Limits& limits) {
  return chi_detail(n, backend, limits).value;
}

CountDetail omega_detail(std::uint64_t n, Backend backend, const Limits& limits) {
  require_positive(n, "omega");
  if (backend == Backend::Native) {
    const std::uint64_t w = distinct_primes(n);
    return {w, std::uint64_t{2} << w, 0, 0};
  }
  CountDetail d = hypercube_detail(omega_spec(n), omega_m_term(), n, backend, limits);
  if (d.solutions < 2) throw ConsistencyError("x^2 = 1 (mod 4n) must have at least two solutions");
  d.value = nu2(nat(d.solutions), Backend::Layered, limits) - 1;
  return d;
}

std::uint64_t omega(std::uint64_t n, Backend backend, const Limits& limits) {
  return omega_detail(n, backend, limits).value;
}

}  // namespace cff
