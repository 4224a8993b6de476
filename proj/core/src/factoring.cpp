#include "cff/factoring.hpp"

#include <json.hpp>

#include "cff/arith.hpp"
#include "cff/errors.hpp"
#include "cff/hypercube.hpp"
#include "cff/roots.hpp"

namespace cff {

namespace {

Natural nat(std::uint64_t v) { return Natural(static_cast<unsigned long>(v)); }

std::string dec(const Natural& v) { return v.get_str(10); }

Natural ipow(const Natural& base, std::uint64_t e) {
  Natural r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace

std::string_view to_string(Method m) { return m == Method::T ? "T" : "U"; }

std::optional<Method> method_from_string(std::string_view s) {
  if (s == "T" || s == "t") return Method::T;
  if (s == "U" || s == "u") return Method::U;
  return std::nullopt;
}

std::string to_json(const FactorReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["method"] = std::string(to_string(r.method));
  j["divisor"] = dec(r.divisor);
  j["cofactor"] = dec(r.cofactor);
  j["chi"] = r.chi;
  j["omega"] = r.omega;
  j["root"] = dec(r.root);
  j["backend"] = std::string(to_string(r.backend));
  j["composite"] = r.composite;
  j["proper"] = r.proper;
  j["micros"] = r.elapsed.count();
  return j.dump();
}

const Term& factor_term(Method m) {
  static const Term t = parse("gcd(n / chi, factorial(floor_root(omega, n)))");
  static const Term u =
      parse("(2 -. chi) * gcd(n, factorial(floor_root(omega, n))) + (1 -. (2 -. chi)) * chi");
  return m == Method::T ? t : u;
}

FactorReport factor(std::uint64_t n, Method m, const FactorOptions& options) {
  if (n < 2) throw DomainError("factoring needs n >= 2");
  const auto start = std::chrono::steady_clock::now();
  FactorReport r;
  r.n = n;
  r.method = m;
  r.backend = options.backend;
  r.chi = chi(n, options.backend, options.limits);
  r.omega = omega(n, options.backend, options.limits);
  if (r.omega == 0) r.omega = 1;
  r.root = floor_root(r.omega, nat(n));
  r.divisor = evaluate(factor_term(m), Env{{"n", nat(n)}, {"chi", nat(r.chi)}, {"omega", nat(r.omega)}},
                       options.limits);
  if (r.divisor == 0 || nat(n) % r.divisor != 0)
    throw ConsistencyError("divisor term returned " + dec(r.divisor) + ", which does not divide " +
                           std::to_string(n));
  r.cofactor = nat(n) / r.divisor;
  r.composite = !is_prime(n);
  r.proper = r.divisor > 1 && r.divisor < nat(n);
  r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
  return r;
}

FactorReport factor_T(std::uint64_t n, const FactorOptions& options) { return factor(n, Method::T, options); }
FactorReport factor_U(std::uint64_t n, const FactorOptions& options) { return factor(n, Method::U, options); }

// ---- conjectured root formula --------------------------------------------------

std::uint64_t floor_root_conjecture_bits(std::uint64_t m, std::uint64_t n) noexcept {
  const std::uint64_t log_n = bit_length(nat(n));
  return sat_mul(sat_mul(sat_mul(2, n), sat_mul(m, m)), log_n);
}

ConjectureReport floor_root_conjecture(std::uint64_t m, const Natural& n, const Limits& limits) {
  if (n <= 2) throw DomainError("conjecture hypothesis n > 2 violated");
  if (m <= 1) throw DomainError("conjecture hypothesis m > 1 violated");
  if (m > bit_length(n)) throw DomainError("conjecture hypothesis floor(log2 n) + 1 >= m violated");
  if (is_perfect_power(m, n)) throw DomainError("conjecture hypothesis: n must not be a perfect m-th power");
  const std::uint64_t nn = to_u64(n, "conjecture n");
  limits.require(floor_root_conjecture_bits(m, nn), "conjectured root formula");

  const std::uint64_t e = 2 * nn * m;
  const Natural base = ipow(n, e) + 1;
  const Natural mod = ipow(n, e * m) - n;
  const Natural exponent = nat(e);
  Natural denominator;
  mpz_powm(denominator.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), mod.get_mpz_t());
  const Natural numerator = denominator * base % mod;

  ConjectureReport r;
  r.m = m;
  r.n = n;
  r.exact = floor_root(m, n);
  if (denominator == 0) {
    r.defined = false;
    return r;
  }
  Natural q;
  mpz_fdiv_q(q.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  r.conjectured = q - 1;
  r.agrees = r.conjectured == r.exact;
  return r;
}

// ---- root bound ----------------------------------------------------------------

bool root_bound_check(std::uint64_t n) {
  if (n < 4 || is_prime(n)) throw DomainError(std::to_string(n) + " is not composite");
  if (!is_squarefree(n)) throw DomainError(std::to_string(n) + " is not squarefree");
  const auto f = factorize(n);
  const Natural root = floor_root(f.size(), nat(n));
  return nat(f.front().prime) <= root && root < nat(f.back().prime);
}

// ---- witness equation --------------------------------------------------------

namespace {

void require_square(bool zero, const char* square, std::uint64_t x) {
  if (!zero)
    throw PropertyViolation("witness for x = " + std::to_string(x) + ": " + square + " is not 0");
}

void require_bound(bool inside, const char* bound, std::uint64_t x) {
  if (!inside) throw PropertyViolation("witness for x = " + std::to_string(x) + " violates " + bound);
}

}  // namespace

std::uint64_t witness_check_pow_equation(std::uint64_t m, std::uint64_t n, const Limits& limits) {
  if (m == 0) throw DomainError("the 0-th root does not make sense");
  if (n == 0) throw DomainError("witness check needs n >= 1");
  // g <= 2s = 2^(3m^2 x + 1) is the largest component.
  limits.require(sat_add(sat_mul(3, sat_mul(sat_mul(m, m), n)), 2), "witness equation");

  const Natural N = nat(n);
  const std::uint64_t cube_exp = sat_mul(6, sat_mul(sat_mul(n, sat_mul(n, n)), sat_mul(m, m)));
  const Natural q_bound = pow2(3 * m * m * n);
  const Natural z_bound = pow2(3 * m * n);
  // The proof bounds w and g as if q < 2^(3mn); with q < 2^(3m^2 n) they become
  // w <= n 2^(3m^2 n) and g = zq <= 2s.
  const Natural w_bound = N * q_bound;
  const Natural g_bound = 2 * q_bound;

  std::uint64_t witnesses = 0;
  for (std::uint64_t xv = 0; xv <= n; ++xv) {
    const Natural x = nat(xv);
    const Natural z = pow2(3 * m * xv);
    const Natural s = pow2(3 * m * m * xv);
    const Natural modulus = z - x;  // 2^(3mx) > x, so the monus is a plain difference
    Natural q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t(), modulus.get_mpz_t());
    if (r > N) continue;  // x^m > n: no y >= 0
    const Natural y = N - r;
    const Natural w = x * q;
    const Natural g = z * q;
    const Natural d = z - x - r - 1;
    if (sgn(d) < 0) throw PropertyViolation("witness for x = " + std::to_string(xv) + ": d is negative");

    require_square(z == pow2(3 * m * xv), "(2^(3mx) - z)^2", xv);
    require_square(pow2(3 * m * xv) * q == g, "(2^(3mx) q - g)^2", xv);
    require_square(w == x * q, "(w - xq)^2", xv);
    require_square(pow2(3 * m * m * xv) == s, "(2^(3m^2 x) - s)^2", xv);
    require_square(N == r + y, "(2^n - 2^(r+y))^2", xv);
    require_square(s + w == g + r, "(2^(s+w) - 2^(g+r))^2", xv);
    require_square(z == x + r + d + 1, "(2^z - 2^(x+r+d+1))^2", xv);
    require_square(r == ipow(x, m), "(r - x^m)^2", xv);

    require_bound(q < q_bound, "q < 2^(3m^2 n)", xv);
    require_bound(r <= N && x <= N && y <= N, "r, x, y <= n", xv);
    require_bound(d < z_bound, "d < 2^(3mn)", xv);
    require_bound(z <= z_bound, "z <= 2^(3mn)", xv);
    require_bound(w <= w_bound, "w <= n 2^(3m^2 n)", xv);
    require_bound(g <= g_bound, "g <= 2^(3m^2 n + 1)", xv);
    require_bound(s <= q_bound, "s <= 2^(3m^2 n)", xv);
    for (const Natural* v : std::initializer_list<const Natural*>{&x, &y, &z, &w, &g, &s, &r, &q, &d})
      require_bound(bit_length(*v) <= cube_exp, "the cube [0, 2^(6 n^3 m^2)]^9", xv);
    ++witnesses;
  }
  return witnesses;
}

}  // namespace cff
