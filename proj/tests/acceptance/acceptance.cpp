// Acceptance run: one line per criterion, exit status 1 if any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cff/arith.hpp"
#include "cff/closed_forms.hpp"
#include "cff/errors.hpp"
#include "cff/factoring.hpp"
#include "cff/hypercube.hpp"
#include "cff/oracles.hpp"
#include "cff/roots.hpp"
#include "cff/verify.hpp"

using namespace cff;

namespace {

enum class Status { Pass, Fail, Deviation };

struct Outcome {
  Status status = Status::Pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double seconds_limit;  // 0: none
  std::function<Outcome()> run;
};

Natural nat(std::uint64_t v) { return Natural(static_cast<unsigned long>(v)); }

// Collects the first few mismatches of a check.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 3) bad_ << (failed_ > 1 ? "; " : "") << what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failed_ == 0) return {Status::Pass, summary + " (" + std::to_string(checked_) + " checks)"};
    return {Status::Fail, std::to_string(failed_) + "/" + std::to_string(checked_) + " failed: " + bad_.str()};
  }
  std::uint64_t failed() const { return failed_; }

 private:
  std::uint64_t checked_ = 0, failed_ = 0;
  std::ostringstream bad_;
};

std::string str(const Natural& v) { return v.get_str(); }

Outcome worked_examples() {
  const FactorOptions options{Backend::FullTerm, Limits{1u << 25}};
  Tally t;
  for (auto [n, d] : {std::pair{10ul, 2ul}, {20ul, 2ul}, {50ul, 10ul}}) {
    const auto r = factor_T(n, options);
    t.check(r.divisor == nat(d), "T(" + std::to_string(n) + ")=" + str(r.divisor));
  }
  return t.outcome("T(10)=2 T(20)=2 T(50)=10, chi/omega as full terms");
}

Outcome chi_full_term() {
  Tally t;
  for (std::uint64_t n = 1; n <= 60; ++n) {
    const auto got = chi(n, Backend::FullTerm);
    t.check(got == oracle::chi_square_scan(n) && got == oracle::chi_residue_count(n), "chi(" + std::to_string(n) + ")");
  }
  return t.outcome("n in 1..60");
}

Outcome omega_full_term() {
  Tally t;
  for (std::uint64_t n = 1; n <= 24; ++n) {
    const auto got = omega(n, Backend::FullTerm);
    const std::uint64_t residues = oracle::omega_residue_count(n);
    t.check(got == oracle::omega_trial(n) && (std::uint64_t{2} << got) == residues, "omega(" + std::to_string(n) + ")");
  }
  return t.outcome("n in 1..24");
}

Outcome gcd_nu2_hw() {
  Tally t;
  std::vector<std::string> outside;
  for (std::uint64_t a = 1; a <= 16; ++a)
    for (std::uint64_t b = 1; b <= 16; ++b) {
      const Natural got = gcd_term(a, b);
      const bool ok = got == nat(oracle::euclid(a, b));
      const std::string at = "gcd(" + std::to_string(a) + "," + std::to_string(b) + ")=" + str(got);
      if (!ok && !gcd_term_in_window(a, b)) {
        outside.push_back(at);
        continue;
      }
      t.check(ok, at);
    }
  for (std::uint64_t n = 1; n <= 64; ++n)
    t.check(nu2(nat(n), Backend::Layered) == oracle::nu2_halving(nat(n)), "nu2(" + std::to_string(n) + ")");
  for (std::uint64_t n = 1; n <= 7; ++n)
    t.check(nu2(nat(n), Backend::FullTerm) == oracle::nu2_halving(nat(n)), "nu2 full(" + std::to_string(n) + ")");
  for (std::uint64_t n = 1; n <= 200; ++n)
    t.check(hw_kummer(n) == oracle::popcount_shift(nat(n)), "hw(" + std::to_string(n) + ")");
  Outcome o = t.outcome("gcd 16x16, nu2 1..64, hw 1..200");
  if (o.status == Status::Pass && !outside.empty()) {
    o.status = Status::Deviation;
    o.detail += "; formula differs from gcd at ";
    for (const auto& s : outside) o.detail += s + " ";
    o.detail += "(gcd+1 overflows the ab-bit block)";
  }
  return o;
}

Outcome binomials_factorial() {
  Tally t;
  std::vector<std::string> outside;
  for (std::uint64_t a = 0; a <= 24; ++a)
    for (std::uint64_t b = 0; b <= a; ++b) {
      const Natural expected = oracle::pascal(a, b);
      const std::string at = std::to_string(a) + "," + std::to_string(b);
      t.check(binom2(a, b) == expected, "binom2(" + at + ")");
      const Natural first = binom1(a, b);
      if (first != expected && !binom1_in_window(a, b)) {
        outside.push_back("binom1(" + at + ")=" + str(first));
        continue;
      }
      t.check(first == expected, "binom1(" + at + ")");
    }
  for (std::uint64_t n = 0; n <= 8; ++n)
    t.check(factorial_term(n, Backend::Layered) == oracle::factorial_product(n), "layered " + std::to_string(n) + "!");
  for (std::uint64_t n = 0; n <= 2; ++n)
    t.check(factorial_term(n, Backend::FullTerm, Limits{1u << 25}) == oracle::factorial_product(n),
            "full " + std::to_string(n) + "!");
  Outcome o = t.outcome("binomials 0<=b<=a<=24, factorial layered 0..8, full 0..2");
  if (o.status == Status::Pass && !outside.empty()) {
    o.status = Status::Deviation;
    o.detail += "; first binomial form differs at ";
    for (const auto& s : outside) o.detail += s + " ";
    o.detail += "(mod 2^0 block)";
  }
  return o;
}

Outcome pow_and_witness() {
  Tally t;
  for (std::uint64_t x = 0; x <= 50; ++x)
    for (std::uint64_t m = 1; m <= 8; ++m)
      t.check(pow_lemma(nat(x), m) == oracle::power_product(x, m), std::to_string(x) + "^" + std::to_string(m));
  for (std::uint64_t m = 1; m <= 3; ++m)
    for (std::uint64_t n = 1; n <= 20; ++n) {
      std::uint64_t got = 0;
      std::string err;
      try {
        got = witness_check_pow_equation(m, n);
      } catch (const Error& e) {
        err = e.what();
      }
      t.check(err.empty() && got == oracle::floor_root_count(m, n) + 1,
              "witness(" + std::to_string(m) + "," + std::to_string(n) + ")" + (err.empty() ? "" : ": " + err));
    }
  return t.outcome("x^m for x<=50 m<=8, witnesses m<=3 n<=20");
}

Outcome g_series_forms() {
  Tally t;
  std::vector<std::uint64_t> qs{1, 2, 3, 4, 5, 6, 7, 8};
  for (unsigned k = 0; k <= 12; ++k) qs.push_back(std::uint64_t{1} << k);
  for (unsigned r : {0u, 1u, 2u, 4u}) {
    const Term term = emit_term({FormulaId::GSeries, r});
    for (std::uint64_t q : qs)
      for (std::uint64_t len = 0; len <= 30; ++len) {
        const Natural expected = oracle::g_series_naive(r, nat(q), len);
        const std::string at = "G" + std::to_string(r) + "(" + std::to_string(q) + "," + std::to_string(len) + ")";
        t.check(g_series(r, nat(q), len) == expected, at);
        t.check(evaluate(term, {{"q", nat(q)}, {"t", nat(len)}}) == expected, at + " term");
      }
  }
  return t.outcome("r in {0,1,2,4}, t<=30, q=1 included");
}

Outcome random_hypercubes() {
  Tally t;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto spec = random_spec(seed);
    t.check(box_size(spec) <= 100'000 && validate(spec).ok, "spec " + std::to_string(seed) + " invalid");
    t.check(count_solutions(spec) == oracle::enumerate_box_zeros(spec), "seed " + std::to_string(seed));
  }
  return t.outcome("60 random 1D/2D specs");
}

Outcome divisor_systems() {
  Tally t;
  for (std::uint64_t n = 2; n <= 24; ++n) {
    const auto r = oracle::smallest_divisor_system_count(n);
    t.check(r.count == oracle::smallest_prime_factor(n) - 1, "smallest(" + std::to_string(n) + ")");
  }
  for (std::uint64_t n = 2; n <= 20; ++n) {
    const auto r = oracle::greatest_prime_system_count(n);
    t.check(r.count == oracle::greatest_prime_factor(n) - 1, "greatest(" + std::to_string(n) + ")");
  }
  return t.outcome("smallest divisor 2..24, greatest prime 2..20");
}

Outcome residue_counts() {
  Tally t;
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    t.check(oracle::chi_residue_count(n) == square_part_root(n), "chi residues " + std::to_string(n));
    t.check(oracle::omega_residue_count(n) == (std::uint64_t{2} << distinct_primes(n)),
            "omega residues " + std::to_string(n));
  }
  return t.outcome("n in 1..2000");
}

Outcome factoring_soundness() {
  Tally t;
  for (std::uint64_t n = 4; n <= 2000; ++n) {
    if (is_prime(n)) continue;
    for (Method m : {Method::T, Method::U}) {
      const auto r = factor(n, m);
      t.check(r.divisor > 1 && r.divisor < nat(n) && nat(n) % r.divisor == 0,
              std::string(to_string(m)) + "(" + std::to_string(n) + ")=" + str(r.divisor));
    }
    if (is_squarefree(n)) t.check(root_bound_check(n), "root bound " + std::to_string(n));
  }
  return t.outcome("composites 4..2000");
}

Outcome root_conjecture() {
  std::uint64_t tested = 0, agree = 0, undefined = 0;
  std::vector<std::string> mismatches;
  for (std::uint64_t m = 2; m <= 6; ++m)
    for (std::uint64_t n = 3; n <= 500; ++n) {
      if (bit_length(nat(n)) < m || is_perfect_power(m, nat(n))) continue;
      const auto r = floor_root_conjecture(m, nat(n), Limits{1u << 22});
      ++tested;
      if (!r.defined) {
        ++undefined;
      } else if (r.agrees) {
        ++agree;
        continue;
      }
      mismatches.push_back("(" + std::to_string(m) + "," + std::to_string(n) + ")");
    }
  for (std::size_t i = 0; i < mismatches.size() && i < 5; ++i)
    std::printf("CONJECTURE mismatch at (m,n)=%s\n", mismatches[i].c_str());
  std::string detail = std::to_string(agree) + "/" + std::to_string(tested) + " agree";
  if (undefined) detail += ", " + std::to_string(undefined) + " undefined";
  if (!mismatches.empty()) detail += ", " + std::to_string(mismatches.size()) + " CONJECTURE lines";
  return {Status::Pass, detail};
}

Outcome bit_growth() {
  Tally t;
  for (std::uint64_t n = 2; n <= 60; ++n) {
    const auto d = chi_detail(n, Backend::Layered);
    const std::int64_t u = static_cast<std::int64_t>(n + 4);
    const std::int64_t target = 2 * u * static_cast<std::int64_t>(n * n);
    const std::int64_t bits = static_cast<std::int64_t>(d.m_bits);
    t.check(bits >= target - 2 * u && bits <= target + 2 * u && d.value == oracle::chi_square_scan(n),
            "n=" + std::to_string(n) + " bits=" + std::to_string(bits));
  }
  return t.outcome("bits(M) within 2(n+4) of 2(n+4)n^2 for n in 2..60");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked factoring examples", 10, worked_examples},
      {2, "chi full term against oracles", 30, chi_full_term},
      {3, "omega full term against oracles", 60, omega_full_term},
      {4, "gcd, nu2 and Kummer HW terms", 30, gcd_nu2_hw},
      {5, "binomial and factorial terms", 30, binomials_factorial},
      {6, "x^m identity and pow witnesses", 60, pow_and_witness},
      {7, "geometric series closed forms", 0, g_series_forms},
      {8, "hypercube counter on random specs", 0, random_hypercubes},
      {9, "divisor system counts", 0, divisor_systems},
      {10, "quadratic residue counts", 60, residue_counts},
      {11, "factoring soundness and root bound", 0, factoring_soundness},
      {12, "conjectured root formula", 0, root_conjecture},
      {13, "bit growth of chi M", 0, bit_growth},
  };
  int failures = 0, deviations = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {Status::Fail, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.seconds_limit > 0 && secs > c.seconds_limit && o.status != Status::Fail) {
      o.status = Status::Fail;
      o.detail += "; over time limit";
    }
    const char* tag = o.status == Status::Pass ? "PASS" : o.status == Status::Fail ? "FAIL" : "DEVIATION";
    std::printf("%-9s %2d %-36s %8.2fs  %s\n", tag, c.id, c.title, secs, o.detail.c_str());
    std::fflush(stdout);
    failures += o.status == Status::Fail;
    deviations += o.status == Status::Deviation;
  }
  std::printf("%d criteria, %d failed, %d with documented deviations\n", static_cast<int>(criteria.size()), failures,
              deviations);
  return failures == 0 ? 0 : 1;
}
