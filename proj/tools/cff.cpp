// cff: evaluate arithmetic terms, factor with the chi/omega divisor terms,
// count hypercube zeros and run verification suites.
//
// Exit status: 0 success, 1 verification mismatch, 2 usage or capacity error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cff/closed_forms.hpp"
#include "cff/errors.hpp"
#include "cff/factoring.hpp"
#include "cff/hypercube.hpp"
#include "cff/limits.hpp"
#include "cff/oracles.hpp"
#include "cff/term.hpp"
#include "cff/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

cff::Env parse_bindings(const std::vector<std::string>& items) {
  cff::Env env;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("binding '" + item + "' is not name=value");
    env[item.substr(0, eq)] = cff::parse_natural(item.substr(eq + 1));
  }
  return env;
}

cff::Backend parse_backend(const std::string& s) {
  auto b = cff::backend_from_string(s);
  if (!b) throw UsageError("unknown backend '" + s + "'");
  return *b;
}

std::uint64_t micros_since(std::chrono::steady_clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count());
}

void print_stats(const cff::Term& t) {
  const auto s = cff::stats(t);
  std::cout << "node_count=" << s.node_count << " depth=" << s.depth << " pow_count=" << s.pow_count << "\n";
}

// ---- eval ---------------------------------------------------------------------

struct EvalArgs {
  std::vector<std::string> args;
  std::string file;
  bool stats = false;
  bool strict = false;
};

int cmd_eval(const EvalArgs& a, const cff::Limits& limits) {
  std::vector<std::string> rest = a.args;
  std::string text;
  if (!a.file.empty()) {
    text = slurp(a.file);
  } else {
    if (rest.empty()) throw UsageError("eval needs a term or --file");
    text = rest.front();
    rest.erase(rest.begin());
  }
  const cff::Term t = cff::parse(text, cff::ParseOptions{!a.strict});
  cff::EvalStats es;
  const cff::Natural v = cff::evaluate(t, parse_bindings(rest), limits, &es);
  std::cout << v.get_str(10) << "\n";
  if (a.stats) {
    print_stats(t);
    std::cout << "max_bits=" << es.max_bits << " evaluations=" << es.evaluations << "\n";
  }
  return kOk;
}

// ---- factor -------------------------------------------------------------------

struct FactorArgs {
  std::string n;
  std::string method = "T";
  std::string backend = "native";
  bool json = false;
};

int cmd_factor(const FactorArgs& a, const cff::Limits& limits) {
  const auto method = cff::method_from_string(a.method);
  if (!method) throw UsageError("method must be T or U");
  const std::uint64_t n = cff::to_u64(cff::parse_natural(a.n), "n");
  const auto r = cff::factor(n, *method, cff::FactorOptions{parse_backend(a.backend), limits});
  std::cout << "n=" << r.n << " method=" << cff::to_string(r.method) << " divisor=" << r.divisor.get_str(10)
            << " cofactor=" << r.cofactor.get_str(10) << " chi=" << r.chi << " omega=" << r.omega
            << " root=" << r.root.get_str(10) << " backend=" << cff::to_string(r.backend)
            << " micros=" << r.elapsed.count() << (r.composite ? "" : " (prime)") << "\n";
  if (a.json) std::cout << cff::to_json(r) << "\n";
  return r.composite && !r.proper ? kMismatch : kOk;
}

// ---- chi / omega --------------------------------------------------------------

struct CountArgsN {
  std::string n;
  std::string backend = "full";
  bool json = false;
};

int cmd_chi_omega(bool is_chi, const CountArgsN& a, const cff::Limits& limits) {
  const std::uint64_t n = cff::to_u64(cff::parse_natural(a.n), "n");
  const auto backend = parse_backend(a.backend);
  const auto start = std::chrono::steady_clock::now();
  const auto d = is_chi ? cff::chi_detail(n, backend, limits) : cff::omega_detail(n, backend, limits);
  const auto us = micros_since(start);
  std::cout << d.value << "\n";
  if (a.json) {
    nlohmann::ordered_json j;
    j["n"] = n;
    j[is_chi ? "chi" : "omega"] = d.value;
    j["solutions"] = d.solutions;
    j["m_bits"] = d.m_bits;
    j["hamming_weight"] = d.hamming_weight;
    j["backend"] = std::string(cff::to_string(backend));
    j["micros"] = us;
    std::cout << j.dump() << "\n";
  }
  return kOk;
}

// ---- emit ---------------------------------------------------------------------

struct EmitArgs {
  std::string formula;
  unsigned r = 0;
  std::string mode = "pure";
  bool stats = false;
  std::vector<std::string> eval;
};

int cmd_emit(const EmitArgs& a, const cff::Limits& limits) {
  const auto id = cff::formula_from_name(a.formula);
  if (!id) throw UsageError("formula '" + a.formula + "' has no emitter");
  if (a.mode != "pure" && a.mode != "hybrid") throw UsageError("mode must be pure or hybrid");
  const cff::Formula f{*id, a.r};
  const cff::Term t = cff::emit_term(f, a.mode == "pure" ? cff::EmitMode::Pure : cff::EmitMode::Hybrid);
  std::cout << cff::render(t) << "\n";
  if (a.stats) print_stats(t);
  if (a.eval.empty()) return kOk;

  const cff::Env env = parse_bindings(a.eval);
  cff::EvalStats es;
  if (*id == cff::FormulaId::Chi || *id == cff::FormulaId::Omega) {
    auto it = env.find("n");
    if (it == env.end()) throw cff::UnboundVariable("n");
    const std::uint64_t n = cff::to_u64(it->second, "n");
    const auto spec = *id == cff::FormulaId::Chi ? cff::chi_spec(n) : cff::omega_spec(n);
    limits.require(cff::build_m_bits(spec), "hypercube M term");
    const cff::Natural m = cff::evaluate(t, env, limits, &es);
    const std::uint64_t count = cff::count_from_M(spec, m);
    const std::uint64_t value =
        *id == cff::FormulaId::Chi ? count : cff::nu2(cff::Natural(static_cast<unsigned long>(count)),
                                                      cff::Backend::Layered, limits) - 1;
    std::cout << "m_bits=" << cff::bit_length(m) << " solutions=" << count << " value=" << value << "\n";
  } else {
    std::cout << "value=" << cff::evaluate(t, env, limits, &es).get_str(10) << "\n";
  }
  std::cout << "max_bits=" << es.max_bits << "\n";
  return kOk;
}

// ---- count --------------------------------------------------------------------

struct CountArgs {
  std::string spec = "-";
  bool enumerate = false;
};

int cmd_count(const CountArgs& a, const cff::Limits& limits) {
  const cff::HypercubeSpec spec = cff::spec_from_json(slurp(a.spec));
  const auto report = cff::validate(spec);
  if (!report.ok) {
    std::string point;
    for (auto x : report.offending_point) point += (point.empty() ? "" : ",") + std::to_string(x);
    throw UsageError("spec violates 0 <= f < 2^u at (" + point + "), f = " + report.offending_value.get_str(10));
  }
  const auto start = std::chrono::steady_clock::now();
  const cff::Natural m = cff::build_M(spec, limits);
  const std::uint64_t count = cff::count_from_M(spec, m);
  nlohmann::ordered_json j;
  j["count"] = count;
  j["m_bits"] = cff::bit_length(m);
  j["validated"] = report.exhaustive ? "exhaustive" : "sampled";
  j["micros"] = micros_since(start);
  int status = kOk;
  if (a.enumerate) {
    const std::uint64_t zeros = cff::oracle::enumerate_box_zeros(spec);
    j["enumerated"] = zeros;
    if (zeros != count) status = kMismatch;
  }
  std::cout << j.dump() << "\n";
  return status;
}

// ---- verify -------------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::string range;
  unsigned jobs = 1;
  std::string backend;
};

int cmd_verify(const VerifyArgs& a, const cff::Limits& limits) {
  if (!cff::is_suite(a.suite)) throw UsageError("unknown suite '" + a.suite + "'");
  cff::VerifyOptions o;
  if (!a.range.empty()) o.range = cff::parse_range(a.range);
  o.jobs = a.jobs;
  o.limits = limits;
  if (!a.backend.empty()) o.backend = parse_backend(a.backend);
  const auto result = cff::run_suite(a.suite, o);
  for (const auto& line : result.lines) {
    std::cout << cff::to_json(line) << "\n";
    if (!line.ok && !line.advisory.empty())
      std::cerr << line.advisory << " " << line.input << ": expected " << line.expected << ", got " << line.got
                << "\n";
  }
  std::cerr << "suite " << result.suite << " " << result.range.lo << ".." << result.range.hi << ": "
            << result.lines.size() << " lines, " << result.failures << " failures, " << result.advisories
            << " advisories\n";
  return result.ok() ? kOk : kMismatch;
}

// ---- bench --------------------------------------------------------------------

struct BenchArgs {
  std::string formula = "chi";
  std::uint64_t min_n = 2;
  std::uint64_t max_n = 20;
  std::string csv;
  std::string backend = "layered";
};

int cmd_bench(const BenchArgs& a, const cff::Limits& limits) {
  if (a.formula != "chi" && a.formula != "omega") throw UsageError("bench formula must be chi or omega");
  if (a.min_n == 0 || a.min_n > a.max_n) throw UsageError("need 1 <= min-n <= max-n");
  const bool is_chi = a.formula == "chi";
  const auto backend = parse_backend(a.backend);
  if (backend == cff::Backend::Native) throw UsageError("bench measures M; use layered or full");

  std::ofstream csv;
  if (!a.csv.empty()) {
    csv.open(a.csv);
    if (!csv) throw UsageError("cannot write '" + a.csv + "'");
    csv << "n,bits,micros\n";
  }
  std::cout << "n\tbits\tmicros\tresult\n";
  int status = kOk;
  for (std::uint64_t n = a.min_n; n <= a.max_n; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const auto d = is_chi ? cff::chi_detail(n, backend, limits) : cff::omega_detail(n, backend, limits);
    const auto us = micros_since(start);
    std::cout << n << "\t" << d.m_bits << "\t" << us << "\t" << d.value << "\n";
    if (csv) csv << n << "," << d.m_bits << "," << us << "\n";
    if (is_chi) {
      const std::uint64_t u = n + 4;
      const std::uint64_t centre = 2 * u * n * n;
      if (d.m_bits + 2 * u < centre || d.m_bits > centre + 2 * u) {
        std::cerr << "bits(M) = " << d.m_bits << " outside " << centre << " +- " << 2 * u << " at n = " << n << "\n";
        status = kMismatch;
      }
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-form arithmetic terms: evaluation, factoring and verification"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate a term; extra arguments are name=value bindings");
  eval->add_option("args", eval_args.args, "term text followed by bindings");
  eval->add_option("-f,--file", eval_args.file, "read the term from a file ('-' for stdin)");
  eval->add_flag("--stats", eval_args.stats, "print node count, depth, pow count and largest intermediate");
  eval->add_flag("--strict", eval_args.strict, "reject gcd/factorial/floor_root calls");

  FactorArgs factor_args;
  auto* factor = app.add_subcommand("factor", "Proper divisor of n from the T or U term");
  factor->add_option("n", factor_args.n)->required();
  factor->add_option("-m,--method", factor_args.method, "T or U")->capture_default_str();
  factor->add_option("-b,--backend", factor_args.backend, "chi/omega backend: native, layered, term")
      ->capture_default_str();
  factor->add_flag("--json", factor_args.json, "also print the report as a JSON line");

  CountArgsN chi_args, omega_args;
  auto* chi = app.add_subcommand("chi", "Largest s with s^2 | n");
  chi->add_option("n", chi_args.n)->required();
  chi->add_option("-b,--backend", chi_args.backend, "full, layered or native")->capture_default_str();
  chi->add_flag("--json", chi_args.json);
  auto* omega = app.add_subcommand("omega", "Number of distinct prime divisors of n");
  omega->add_option("n", omega_args.n)->required();
  omega->add_option("-b,--backend", omega_args.backend, "full, layered or native")->capture_default_str();
  omega->add_flag("--json", omega_args.json);

  EmitArgs emit_args;
  auto* emit = app.add_subcommand("emit", "Print the term for a formula");
  emit->add_option("--formula", emit_args.formula,
                   "hw, nu2, gcd, binom1, binom2, factorial, delta, gseries, pow, chi, omega")
      ->required();
  emit->add_option("-r", emit_args.r, "series order for gseries")->capture_default_str();
  emit->add_option("--mode", emit_args.mode, "pure or hybrid")->capture_default_str();
  emit->add_flag("--stats", emit_args.stats);
  emit->add_option("--eval", emit_args.eval, "name=value bindings to evaluate the emitted term at");

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Zeros of a JSON hypercube spec via the Hamming weight of M");
  count->add_option("spec", count_args.spec, "spec file, '-' for stdin")->capture_default_str();
  count->add_flag("--enumerate", count_args.enumerate, "cross-check by enumerating the box");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run a verification suite, one JSON line per check");
  verify->add_option("-s,--suite", verify_args.suite)->required();
  verify->add_option("-r,--range", verify_args.range, "a..b");
  verify->add_option("-j,--jobs", verify_args.jobs)->capture_default_str();
  verify->add_option("-b,--backend", verify_args.backend, "backend for chi, omega and factor");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Bit length and time of M for chi or omega");
  bench->add_option("--formula", bench_args.formula, "chi or omega")->capture_default_str();
  bench->add_option("--min-n", bench_args.min_n)->capture_default_str();
  bench->add_option("--max-n", bench_args.max_n)->capture_default_str();
  bench->add_option("--csv", bench_args.csv, "write n,bits,micros rows");
  bench->add_option("-b,--backend", bench_args.backend, "layered or full")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const cff::Limits limits = cff::Limits::from_env();
    if (*eval) return cmd_eval(eval_args, limits);
    if (*factor) return cmd_factor(factor_args, limits);
    if (*chi) return cmd_chi_omega(true, chi_args, limits);
    if (*omega) return cmd_chi_omega(false, omega_args, limits);
    if (*emit) return cmd_emit(emit_args, limits);
    if (*count) return cmd_count(count_args, limits);
    if (*verify) return cmd_verify(verify_args, limits);
    if (*bench) return cmd_bench(bench_args, limits);
  } catch (const cff::ConsistencyError& e) {
    std::cerr << "cff: " << e.what() << "\n";
    return kMismatch;
  } catch (const cff::PropertyViolation& e) {
    std::cerr << "cff: " << e.what() << "\n";
    return kMismatch;
  } catch (const cff::Error& e) {
    std::cerr << "cff: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "cff: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
