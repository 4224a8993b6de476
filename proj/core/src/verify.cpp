#include "cff/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <thread>

#include <json.hpp>

#include "cff/arith.hpp"
#include "cff/errors.hpp"
#include "cff/factoring.hpp"
#include "cff/oracles.hpp"
#include "cff/roots.hpp"

namespace cff {

namespace {

Natural nat(std::uint64_t v) { return Natural(static_cast<unsigned long>(v)); }

std::string dec(const Natural& v) { return v.get_str(10); }
std::string dec(std::uint64_t v) { return std::to_string(v); }

class Timer {
 public:
  std::uint64_t micros() const {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start_).count());
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Builds a line; `got` is computed under a timer and library errors other
// than capacity become the got text.
template <class F>
ReportLine check(std::string_view suite, std::string input, std::string expected, F&& compute,
                 std::uint64_t bits = 0) {
  ReportLine line{std::string(suite), std::move(input), std::move(expected), {}, false, bits, 0, {}};
  Timer timer;
  try {
    line.got = compute();
  } catch (const CapacityError&) {
    throw;
  } catch (const Error& e) {
    line.got = std::string("error: ") + e.what();
  }
  line.micros = timer.micros();
  line.ok = line.expected == line.got;
  return line;
}

using Lines = std::vector<ReportLine>;
using ItemFn = std::function<Lines(std::uint64_t)>;

struct Suite {
  Range range;
  std::function<ItemFn(const VerifyOptions&)> make;
};

Backend backend_or(const VerifyOptions& o, Backend fallback) { return o.backend.value_or(fallback); }

// ---- suites ------------------------------------------------------------------

ItemFn chi_suite(const VerifyOptions& o) {
  const Backend backend = backend_or(o, Backend::FullTerm);
  return [=](std::uint64_t n) -> Lines {
    if (n == 0) return {};
    const std::uint64_t scan = oracle::chi_square_scan(n);
    const std::uint64_t residues = oracle::chi_residue_count(n);
    const std::string expected = scan == residues ? dec(scan) : dec(scan) + "|" + dec(residues);
    std::uint64_t bits = 0;
    Lines out{check("chi", "n=" + dec(n), expected, [&] {
      const auto d = chi_detail(n, backend, o.limits);
      bits = d.m_bits;
      return dec(d.value);
    })};
    out.back().bits = bits;
    return out;
  };
}

ItemFn omega_suite(const VerifyOptions& o) {
  const Backend backend = backend_or(o, Backend::FullTerm);
  return [=](std::uint64_t n) -> Lines {
    if (n == 0) return {};
    const std::uint64_t trial = oracle::omega_trial(n);
    const std::uint64_t residues = oracle::omega_residue_count(n);
    const std::string expected =
        residues == (std::uint64_t{2} << trial) ? dec(trial) : dec(trial) + "|residues=" + dec(residues);
    std::uint64_t bits = 0;
    Lines out{check("omega", "n=" + dec(n), expected, [&] {
      const auto d = omega_detail(n, backend, o.limits);
      bits = d.m_bits;
      return dec(d.value);
    })};
    out.back().bits = bits;
    return out;
  };
}

ItemFn gcd_suite(const VerifyOptions& o) {
  const Range r = o.range.value_or(Range{1, 16});
  return [=](std::uint64_t a) -> Lines {
    Lines out;
    if (a == 0) return out;
    for (std::uint64_t b = std::max<std::uint64_t>(r.lo, 1); b <= r.hi; ++b) {
      out.push_back(check("gcd", "a=" + dec(a) + ",b=" + dec(b), dec(oracle::euclid(a, b)),
                          [&] { return dec(gcd_term(a, b, o.limits)); }, gcd_term_bits(a, b)));
      if (!out.back().ok && !gcd_term_in_window(a, b)) out.back().advisory = "outside validity window";
    }
    return out;
  };
}

ItemFn nu2_suite(const VerifyOptions& o) {
  return [=](std::uint64_t n) -> Lines {
    Lines out;
    if (n == 0) return out;
    const std::string expected = dec(oracle::nu2_halving(nat(n)));
    out.push_back(check("nu2", "n=" + dec(n) + ",backend=layered", expected,
                        [&] { return dec(nu2(nat(n), Backend::Layered, o.limits)); }));
    if (nu2_term_bits(n) <= o.limits.bit_budget)
      out.push_back(check("nu2", "n=" + dec(n) + ",backend=full", expected,
                          [&] { return dec(nu2(nat(n), Backend::FullTerm, o.limits)); }, nu2_term_bits(n)));
    return out;
  };
}

ItemFn hw_suite(const VerifyOptions& o) {
  return [=](std::uint64_t n) -> Lines {
    return {check("hw", "n=" + dec(n), dec(oracle::popcount_shift(nat(n))),
                  [&] { return dec(hw_kummer(n, o.limits)); }, binom1_bits(2 * n))};
  };
}

ItemFn binom_suite(const VerifyOptions& o) {
  return [=](std::uint64_t a) -> Lines {
    Lines out;
    for (std::uint64_t b = 0; b <= a; ++b) {
      const std::string input = "a=" + dec(a) + ",b=" + dec(b);
      const std::string expected = dec(oracle::pascal(a, b));
      auto first = check("binom", input + ",form=1", expected, [&] { return dec(binom1(a, b, o.limits)); },
                         binom1_bits(a));
      if (!first.ok && !binom1_in_window(a, b)) first.advisory = "outside validity window";
      out.push_back(std::move(first));
      out.push_back(check("binom", input + ",form=2", expected, [&] { return dec(binom2(a, b, o.limits)); },
                          binom2_bits(a, b)));
    }
    return out;
  };
}

ItemFn factorial_suite(const VerifyOptions& o) {
  return [=](std::uint64_t n) -> Lines {
    Lines out;
    const std::string expected = dec(oracle::factorial_product(n));
    for (Backend b : {Backend::Layered, Backend::FullTerm}) {
      const std::uint64_t bits = factorial_term_bits(n, b);
      if (bits > o.limits.bit_budget) continue;
      out.push_back(check("factorial", "n=" + dec(n) + ",backend=" + std::string(to_string(b)), expected,
                          [&] { return dec(factorial_term(n, b, o.limits)); }, bits));
    }
    return out;
  };
}

ItemFn pow_suite(const VerifyOptions& o) {
  return [=](std::uint64_t x) -> Lines {
    Lines out;
    for (std::uint64_t m = 1; m <= 8; ++m)
      out.push_back(check("pow", "x=" + dec(x) + ",m=" + dec(m), dec(oracle::power_product(x, m)),
                          [&] { return dec(pow_lemma(nat(x), m, o.limits)); }, pow_lemma_bits(x, m)));
    return out;
  };
}

std::vector<std::uint64_t> g_series_bases() {
  std::vector<std::uint64_t> qs{1, 2, 3, 4, 5, 6, 7, 8};
  for (unsigned k = 4; k <= 12; ++k) qs.push_back(std::uint64_t{1} << k);
  return qs;
}

ItemFn gseries_suite(const VerifyOptions& o) {
  return [=](std::uint64_t t) -> Lines {
    Lines out;
    for (unsigned r : {0u, 1u, 2u, 4u}) {
      const Term term = emit_term({FormulaId::GSeries, r});
      for (std::uint64_t q : g_series_bases()) {
        const std::string input = "r=" + dec(r) + ",q=" + dec(q) + ",t=" + dec(t);
        const std::string expected = dec(oracle::g_series_naive(r, nat(q), t));
        out.push_back(check("gseries", input + ",via=value", expected,
                            [&] { return dec(g_series(r, nat(q), t, o.limits)); }));
        EvalStats stats;
        out.push_back(check("gseries", input + ",via=term", expected, [&] {
          return dec(evaluate(term, Env{{"q", nat(q)}, {"t", nat(t)}}, o.limits, &stats));
        }));
        out.back().bits = stats.max_bits;
      }
    }
    return out;
  };
}

ItemFn hypercube_suite(const VerifyOptions& o) {
  return [=](std::uint64_t seed) -> Lines {
    const HypercubeSpec spec = random_spec(seed);
    const std::string input = "seed=" + dec(seed) + ",k=" + dec(spec.k) + ",t=" + dec(spec.t);
    std::uint64_t bits = 0;
    Lines out{check("hypercube-random", input, dec(oracle::enumerate_box_zeros(spec)), [&] {
      const Natural m = build_M(spec, o.limits);
      bits = bit_length(m);
      return dec(count_from_M(spec, m));
    })};
    out.back().bits = bits;
    return out;
  };
}

ItemFn systems_suite(const VerifyOptions&) {
  return [](std::uint64_t n) -> Lines {
    Lines out;
    auto line = [&](const oracle::CountReport& r) {
      out.push_back(ReportLine{"systems", std::string(oracle::to_string(r.lemma)) + ",n=" + dec(n),
                               dec(r.predicted), dec(r.count), r.agrees, 0, 0, {}});
    };
    if (n >= 2 && n <= 24) line(oracle::smallest_divisor_system_count(n));
    if (n >= 2 && n <= 20) line(oracle::greatest_prime_system_count(n));
    return out;
  };
}

ItemFn residues_suite(const VerifyOptions&) {
  return [](std::uint64_t n) -> Lines {
    if (n == 0) return {};
    return {check("residues", "chi,n=" + dec(n), dec(oracle::chi_square_scan(n)),
                  [&] { return dec(oracle::chi_residue_count(n)); }),
            check("residues", "omega,n=" + dec(n), dec(std::uint64_t{2} << oracle::omega_trial(n)),
                  [&] { return dec(oracle::omega_residue_count(n)); })};
  };
}

ItemFn conjecture_suite(const VerifyOptions& o) {
  return [=](std::uint64_t n) -> Lines {
    Lines out;
    const Natural N = nat(n);
    for (std::uint64_t m = 2; m <= 6; ++m) {
      if (n <= 2 || m > bit_length(N) || is_perfect_power(m, N)) continue;
      ReportLine line = check("root-conjecture", "m=" + dec(m) + ",n=" + dec(n), dec(oracle::floor_root_count(m, n)),
                              [&] {
                                const auto r = floor_root_conjecture(m, N, o.limits);
                                return r.defined ? dec(r.conjectured) : std::string("undefined");
                              },
                              floor_root_conjecture_bits(m, n));
      if (!line.ok) line.advisory = "CONJECTURE";
      out.push_back(std::move(line));
    }
    return out;
  };
}

std::string divisor_line(const Natural& d, std::uint64_t n) {
  if (d > 1 && d < nat(n) && nat(n) % d == 0) return dec(d);
  return "not a proper divisor: " + dec(d);
}

ItemFn factor_suite(const VerifyOptions& o) {
  FactorOptions fo{backend_or(o, Backend::Native), o.limits};
  return [=](std::uint64_t n) -> Lines {
    Lines out;
    if (n < 4 || is_prime(n)) return out;
    // Reference value of each term from the oracles alone.
    const std::uint64_t chi_v = oracle::chi_square_scan(n);
    const std::uint64_t omega_v = std::max<std::uint64_t>(oracle::omega_trial(n), 1);
    const Natural fact = oracle::factorial_product(oracle::floor_root_count(omega_v, n));
    Natural t_ref, g_ref;
    mpz_gcd(t_ref.get_mpz_t(), nat(n / chi_v).get_mpz_t(), fact.get_mpz_t());
    mpz_gcd(g_ref.get_mpz_t(), nat(n).get_mpz_t(), fact.get_mpz_t());
    const Natural u_ref = chi_v == 1 ? g_ref : nat(chi_v);
    for (Method m : {Method::T, Method::U}) {
      out.push_back(check("factor", std::string(to_string(m)) + ",n=" + dec(n),
                          divisor_line(m == Method::T ? t_ref : u_ref, n),
                          [&] { return divisor_line(factor(n, m, fo).divisor, n); }));
    }
    if (is_squarefree(n))
      out.push_back(check("factor", "root-bound,n=" + dec(n), "true",
                          [&] { return std::string(root_bound_check(n) ? "true" : "false"); }));
    return out;
  };
}

ItemFn witness_suite(const VerifyOptions& o) {
  return [=](std::uint64_t n) -> Lines {
    Lines out;
    if (n == 0) return out;
    for (std::uint64_t m = 1; m <= 3; ++m)
      out.push_back(check("witness", "m=" + dec(m) + ",n=" + dec(n), dec(oracle::floor_root_count(m, n) + 1),
                          [&] { return dec(witness_check_pow_equation(m, n, o.limits)); }));
    return out;
  };
}

const std::map<std::string_view, Suite>& suites() {
  static const std::map<std::string_view, Suite> table{
      {"chi", {{1, 60}, chi_suite}},
      {"omega", {{1, 24}, omega_suite}},
      {"gcd", {{1, 16}, gcd_suite}},
      {"nu2", {{1, 64}, nu2_suite}},
      {"hw", {{1, 200}, hw_suite}},
      {"binom", {{0, 24}, binom_suite}},
      {"factorial", {{0, 8}, factorial_suite}},
      {"pow", {{0, 50}, pow_suite}},
      {"gseries", {{0, 30}, gseries_suite}},
      {"hypercube-random", {{1, 60}, hypercube_suite}},
      {"systems", {{2, 24}, systems_suite}},
      {"residues", {{1, 2000}, residues_suite}},
      {"root-conjecture", {{3, 500}, conjecture_suite}},
      {"factor", {{4, 2000}, factor_suite}},
      {"witness", {{1, 20}, witness_suite}},
  };
  return table;
}

const Suite& find_suite(std::string_view name) {
  auto it = suites().find(name);
  if (it == suites().end()) throw DomainError("unknown suite '" + std::string(name) + "'");
  return it->second;
}

// ---- random specs --------------------------------------------------------------

struct Piece {
  long c;
  std::vector<std::uint64_t> v;
  std::vector<std::uint64_t> r;
};

}  // namespace

std::string to_json(const ReportLine& line) {
  nlohmann::ordered_json j;
  j["suite"] = line.suite;
  j["input"] = line.input;
  j["expected"] = line.expected;
  j["got"] = line.got;
  j["ok"] = line.ok;
  j["bits"] = line.bits;
  j["micros"] = line.micros;
  return j.dump();
}

Range parse_range(std::string_view text) {
  auto number = [&](std::string_view s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos)
      throw DomainError("bad range '" + std::string(text) + "', expected a..b");
    return to_u64(parse_natural(s), "range bound");
  };
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const auto v = number(text);
    return {v, v};
  }
  Range r{number(text.substr(0, dots)), number(text.substr(dots + 2))};
  if (r.lo > r.hi) throw DomainError("bad range '" + std::string(text) + "': lower bound exceeds upper bound");
  return r;
}

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{
      "chi",   "omega",   "gcd",     "nu2",      "hw",        "binom",          "factorial", "pow",
      "gseries", "hypercube-random", "systems", "residues", "root-conjecture", "factor", "witness"};
  return names;
}

bool is_suite(std::string_view name) { return suites().count(name) != 0; }

Range default_range(std::string_view suite) { return find_suite(suite).range; }

SuiteResult run_suite(std::string_view name, const VerifyOptions& options) {
  const Suite& suite = find_suite(name);
  SuiteResult result;
  result.suite = std::string(name);
  result.range = options.range.value_or(suite.range);
  const ItemFn item = suite.make(options);

  const std::uint64_t count = result.range.hi - result.range.lo + 1;
  std::vector<Lines> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i = next++; i < count; i = next++) {
      try {
        slots[i] = item(result.range.lo + i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(std::min<std::uint64_t>(count, 256))));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (std::uint64_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    for (auto& line : slots[i]) {
      if (!line.ok) ++(line.advisory.empty() ? result.failures : result.advisories);
      result.lines.push_back(std::move(line));
    }
  }
  return result;
}

HypercubeSpec random_spec(std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
  auto pick = [&](std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
  };
  const unsigned k = pick(1, 2) == 1 ? 1 : 2;
  const std::uint64_t t = k == 1 ? pick(2, 40) : pick(2, 12);

  // p = sum of pieces + a constant chosen so that p vanishes at one point.
  // One power step per coordinate keeps the powers of p^2 in {0,1,2} or
  // {0,2,4}, all of which have a series closed form.
  std::vector<std::uint64_t> step(k);
  for (auto& s : step) s = pick(1, 2);
  std::vector<Piece> pieces;
  const std::uint64_t terms = pick(1, 3);
  for (std::uint64_t i = 0; i < terms; ++i) {
    Piece p{static_cast<long>(pick(1, 3)) * (pick(0, 1) ? 1 : -1), {}, {}};
    for (unsigned d = 0; d < k; ++d) {
      p.v.push_back(pick(1, 3) == 1 ? pick(2, 3) : 1);
      p.r.push_back(pick(0, 1) * step[d]);
    }
    pieces.push_back(std::move(p));
  }
  HypercubeSpec linear{k, t, 1, 0, {}};
  for (const auto& p : pieces) {
    std::vector<Natural> v;
    for (auto b : p.v) v.push_back(nat(b));
    linear.monomials.push_back(Monomial{Natural(p.c), std::move(v), p.r});
  }
  std::vector<std::uint64_t> root(k);
  for (auto& x : root) x = pick(0, t - 1);
  const Natural shift = -evaluate_polynomial(linear, root);

  // f = p^2, expanded over pairs of pieces, constants merged.
  std::vector<Monomial> expanded;
  auto add = [&](Natural c, std::vector<Natural> v, std::vector<std::uint64_t> r) {
    if (c == 0) return;
    for (auto& m : expanded)
      if (m.v == v && m.r == r) {
        m.c += c;
        return;
      }
    expanded.push_back(Monomial{std::move(c), std::move(v), std::move(r)});
  };
  const std::vector<Natural> ones(k, 1);
  const std::vector<std::uint64_t> zeros(k, 0);
  for (const auto& a : linear.monomials) {
    for (const auto& b : linear.monomials) {
      std::vector<Natural> v(k);
      std::vector<std::uint64_t> r(k);
      for (unsigned d = 0; d < k; ++d) {
        v[d] = a.v[d] * b.v[d];
        r[d] = a.r[d] + b.r[d];
      }
      add(a.c * b.c, std::move(v), std::move(r));
    }
    add(2 * shift * a.c, a.v, a.r);
  }
  add(shift * shift, ones, zeros);

  HypercubeSpec spec{k, t, 1, 0, {}};
  for (auto& m : expanded) {
    if (m.c == 0) continue;
    if (m.v == ones && m.r == zeros && sgn(m.c) > 0) {
      spec.c0 += m.c;
    } else {
      spec.monomials.push_back(std::move(m));
    }
  }

  // u from the exact maximum of f over the box.
  Natural max_f = 0;
  std::vector<std::uint64_t> point(k, 0);
  const std::uint64_t total = box_size(spec);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (auto& x : point) {
      x = rest % t;
      rest /= t;
    }
    max_f = std::max(max_f, Natural(evaluate_polynomial(spec, point)));
  }
  spec.u = std::max<std::uint64_t>(bit_length(max_f), 1) + pick(0, 2);
  if (!validate(spec).ok) throw ConsistencyError("random spec failed validation");
  return spec;
}

}  // namespace cff
