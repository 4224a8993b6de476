#include "cff/oracles.hpp"

#include "cff/errors.hpp"

namespace cff::oracle {

namespace {

__extension__ typedef unsigned __int128 u128;

Natural nat(std::uint64_t v) { return Natural(static_cast<unsigned long>(v)); }

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t factorial_mod(std::uint64_t k, std::uint64_t mod) {
  std::uint64_t acc = 1 % mod;
  for (std::uint64_t i = 2; i <= k; ++i) acc = static_cast<std::uint64_t>(u128(acc) * i % mod);
  return acc;
}

// Exponent of prime p in k!.
std::uint64_t legendre(std::uint64_t k, std::uint64_t p) {
  std::uint64_t e = 0;
  for (std::uint64_t q = k / p; q > 0; q /= p) e += q;
  return e;
}

void require_range(std::uint64_t n, std::uint64_t lo, std::uint64_t hi, const char* what) {
  if (n < lo || n > hi)
    throw RangeError(std::string(what) + " is enumerated for n in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "], got " + std::to_string(n));
}

CountReport finish(std::uint64_t n, Lemma lemma, std::uint64_t count, std::uint64_t predicted) {
  return CountReport{n, lemma, count, predicted, count == predicted};
}

}  // namespace

std::string_view to_string(Lemma l) {
  switch (l) {
    case Lemma::SmallestDivisorSystem: return "smallest-divisor-system";
    case Lemma::GreatestPrimeSystem: return "greatest-prime-system";
    case Lemma::ChiResidues: return "chi-residues";
    case Lemma::OmegaResidues: return "omega-residues";
  }
  return "?";
}

std::uint64_t chi_residue_count(std::uint64_t n) {
  if (n == 0) throw DomainError("chi residue count needs n >= 1");
  std::uint64_t count = 0;
  for (std::uint64_t a = 0; a < n; ++a)
    if (u128(a) * a % n == 0) ++count;
  return count;
}

std::uint64_t omega_residue_count(std::uint64_t n) {
  if (n == 0) throw DomainError("omega residue count needs n >= 1");
  const std::uint64_t mod = 4 * n;
  std::uint64_t count = 0;
  for (std::uint64_t a = 0; a < mod; ++a)
    if (u128(a) * a % mod == 1) ++count;
  return count;
}

CountReport smallest_divisor_system_count(std::uint64_t n) {
  require_range(n, 2, 24, "smallest-divisor system");
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s + 2 <= n; ++s) {
    const std::uint64_t D = s + 2;
    if (n % D != 0) continue;  // c = n / D
    // d in [0, n] with d (D-1)! + 1 = 0 mod n; then e and f = n - d follow.
    const std::uint64_t f = factorial_mod(D - 1, n);
    std::uint64_t ds = 0;
    for (std::uint64_t d = 0; d <= n; ++d)
      if ((u128(d) * f + 1) % n == 0) ++ds;
    count += ds * (s + 1);
  }
  const std::uint64_t predicted = smallest_prime_factor(n) - 1;
  return finish(n, Lemma::SmallestDivisorSystem, count, predicted);
}

CountReport greatest_prime_system_count(std::uint64_t n) {
  require_range(n, 2, 20, "greatest-prime system");
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s + 2 <= n; ++s) {
    const std::uint64_t D = s + 2;
    if (n % D != 0) continue;
    if ((factorial_mod(D - 1, D) + 1) % D != 0) continue;  // d = ((D-1)! + 1) / D
    // n | (D!)^n: every prime power p^a || n needs n * v_p(D!) >= a.
    bool divides = true;
    std::uint64_t rest = n;
    for (std::uint64_t p = 2; p <= rest; ++p) {
      if (rest % p != 0) continue;
      std::uint64_t a = 0;
      while (rest % p == 0) rest /= p, ++a;
      if (n * legendre(D, p) < a) divides = false;
    }
    if (divides) count += s + 1;
  }
  const std::uint64_t predicted = greatest_prime_factor(n) - 1;
  return finish(n, Lemma::GreatestPrimeSystem, count, predicted);
}

std::uint64_t enumerate_box_zeros(const HypercubeSpec& spec) {
  check_shape(spec);
  std::uint64_t total = 1;
  for (unsigned i = 0; i < spec.k; ++i) {
    if (total > 10'000'000 / spec.t) throw RangeError("box enumeration needs t^k <= 10^7");
    total *= spec.t;
  }
  std::vector<std::uint64_t> point(spec.k, 0);
  std::uint64_t zeros = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (auto& x : point) {
      x = rest % spec.t;
      rest /= spec.t;
    }
    if (evaluate_polynomial(spec, point) == 0) ++zeros;
  }
  return zeros;
}

Natural m_by_definition(const HypercubeSpec& spec) {
  check_shape(spec);
  std::uint64_t total = 1;
  for (unsigned i = 0; i < spec.k; ++i) {
    if (total > 100'000 / spec.t) throw RangeError("M by definition needs t^k <= 10^5");
    total *= spec.t;
  }
  const Natural block = pow2(spec.u);
  std::vector<std::uint64_t> point(spec.k, 0);
  Natural m = 0;
  for (std::uint64_t beta = total; beta-- > 0;) {
    std::uint64_t rest = beta;
    for (auto& x : point) {
      x = rest % spec.t;
      rest /= spec.t;
    }
    const Natural f = evaluate_polynomial(spec, point);
    if (sgn(f) < 0 || f >= block) throw DomainError("f leaves [0, 2^u) at beta = " + std::to_string(beta));
    m <<= 2 * spec.u;
    m += (block - 1) * (block - f + 1);
  }
  return m;
}

std::uint64_t chi_square_scan(std::uint64_t n) {
  if (n == 0) throw DomainError("chi(0) is undefined");
  std::uint64_t s = 1;
  while (u128(s + 1) * (s + 1) <= n) ++s;
  for (; s > 1; --s)
    if (n % (s * s) == 0) return s;
  return 1;
}

std::uint64_t omega_trial(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    ++count;
    while (n % p == 0) n /= p;
  }
  return count;
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  if (n < 2) throw DomainError("no prime factor below 2");
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

std::uint64_t greatest_prime_factor(std::uint64_t n) {
  if (n < 2) throw DomainError("no prime factor below 2");
  for (std::uint64_t p = n; p >= 2; --p)
    if (n % p == 0 && is_prime_trial(p)) return p;
  return n;
}

Natural pascal(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  std::vector<Natural> row{1};
  for (std::uint64_t i = 1; i <= a; ++i) {
    std::vector<Natural> next(i + 1, 1);
    for (std::uint64_t j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[b];
}

std::uint64_t euclid(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::uint64_t nu2_halving(Natural n) {
  if (n <= 0) throw DomainError("nu2(0) is undefined");
  std::uint64_t v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  return v;
}

std::uint64_t popcount_shift(Natural n) {
  std::uint64_t c = 0;
  for (; n > 0; n >>= 1)
    if (n % 2 == 1) ++c;
  return c;
}

Natural factorial_product(std::uint64_t n) {
  Natural f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= nat(i);
  return f;
}

Natural power_product(std::uint64_t x, std::uint64_t m) {
  Natural p = 1;
  for (std::uint64_t i = 0; i < m; ++i) p *= nat(x);
  return p;
}

std::uint64_t floor_root_count(std::uint64_t m, std::uint64_t n) {
  if (m == 0) throw DomainError("the 0-th root does not make sense");
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x <= n && power_product(x, m) <= nat(n); ++x) ++count;
  return count - 1;
}

Natural g_series_naive(unsigned r, const Natural& q, std::uint64_t t) {
  Natural sum = 0;
  Natural qj = 1;
  for (std::uint64_t j = 0; j < t; ++j) {
    sum += power_product(j, r) * qj;
    qj *= q;
  }
  return sum;
}

}  // namespace cff::oracle
