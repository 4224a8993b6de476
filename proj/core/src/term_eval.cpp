#include <cmath>
#include <unordered_map>

#include "cff/errors.hpp"
#include "cff/roots.hpp"
#include "cff/term.hpp"

namespace cff {

namespace {

// Bits of base^exponent, rounded up; exact for powers of two.
std::uint64_t pow_bits(const Natural& base, std::uint64_t exponent) {
  const std::uint64_t bl = bit_length(base);
  if (popcount(base) == 1) return sat_add(sat_mul(bl - 1, exponent), 1);
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, base.get_mpz_t());
  const long double log2_base = static_cast<long double>(exp2) + std::log2(static_cast<long double>(mant));
  const long double bits = log2_base * static_cast<long double>(exponent) + 1.0L;
  if (bits >= 1.8e19L) return UINT64_MAX;
  return static_cast<std::uint64_t>(bits) + 1;
}

class Evaluator {
 public:
  Evaluator(const Env& env, const Limits& limits, EvalStats* stats)
      : env_(env), limits_(limits), stats_(stats) {}

  Natural eval(const Term& t) {
    if (t.shared()) {
      if (auto it = memo_.find(t.id()); it != memo_.end()) return it->second;
      Natural v = compute(t);
      memo_.emplace(t.id(), v);
      return v;
    }
    return compute(t);
  }

 private:
  Natural compute(const Term& t) {
    Natural r = compute_raw(t);
    if (stats_ != nullptr) {
      ++stats_->evaluations;
      stats_->max_bits = std::max(stats_->max_bits, bit_length(r));
    }
    return r;
  }

  Natural compute_raw(const Term& t) {
    switch (t.op()) {
      case Op::Const:
        return t.value();
      case Op::Var: {
        auto it = env_.find(t.name());
        if (it == env_.end()) throw UnboundVariable(t.name());
        if (sgn(it->second) < 0) throw DomainError("variable '" + t.name() + "' is bound to a negative value");
        return it->second;
      }
      case Op::Call:
        return call(t);
      default:
        break;
    }
    const Natural a = eval(t.lhs());
    const Natural b = eval(t.rhs());
    Natural r;
    switch (t.op()) {
      case Op::Add:
        r = a + b;
        break;
      case Op::Monus:
        r = a > b ? Natural(a - b) : Natural(0);
        break;
      case Op::Mul:
        limits_.require(sat_add(bit_length(a), bit_length(b)), "multiplication");
        r = a * b;
        break;
      case Op::Div:
        if (sgn(b) == 0) return 0;
        mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        break;
      case Op::Mod:
        if (sgn(b) == 0) return a;
        mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        break;
      case Op::Pow:
        r = power(a, b);
        break;
      default:
        throw DomainError("unknown operator");
    }
    return r;
  }

  Natural power(const Natural& base, const Natural& exponent) {
    if (sgn(exponent) == 0) return 1;  // includes 0^0
    if (base <= 1) return base;
    if (bit_length(exponent) > 64) throw CapacityError("exponentiation", UINT64_MAX, limits_.bit_budget);
    const std::uint64_t e = to_u64(exponent, "exponent");
    limits_.require(pow_bits(base, e), "exponentiation");
    Natural r;
    if (base == 2) {
      mpz_setbit(r.get_mpz_t(), e);
    } else {
      mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    }
    return r;
  }

  Natural call(const Term& t) {
    const auto args = t.children();
    if (t.name() == kGcd) {
      Natural r;
      const Natural a = eval(args[0]);
      const Natural b = eval(args[1]);
      mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      return r;
    }
    if (t.name() == kFactorial) {
      const Natural n = eval(args[0]);
      if (bit_length(n) > 32) throw CapacityError("factorial", UINT64_MAX, limits_.bit_budget);
      const std::uint64_t k = to_u64(n, "factorial argument");
      const std::uint64_t bits = k < 2 ? 1 : pow_bits(Natural(static_cast<unsigned long>(k)), k);
      limits_.require(bits, "factorial");
      Natural r;
      mpz_fac_ui(r.get_mpz_t(), k);
      return r;
    }
    if (t.name() == kFloorRoot) {
      const Natural m = eval(args[0]);
      const Natural n = eval(args[1]);
      if (bit_length(m) > 64) return n <= 1 ? n : Natural(1);
      return floor_root(to_u64(m, "root order"), n);
    }
    throw DomainError("unknown call '" + t.name() + "'");
  }

  const Env& env_;
  const Limits& limits_;
  EvalStats* stats_;
  std::unordered_map<const void*, Natural> memo_;
};

}  // namespace

Natural evaluate(const Term& t, const Env& env, const Limits& limits, EvalStats* stats) {
  return Evaluator(env, limits, stats).eval(t);
}

}  // namespace cff
