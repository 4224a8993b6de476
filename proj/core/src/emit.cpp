#include "cff/closed_forms.hpp"
#include "cff/errors.hpp"
#include "cff/hypercube.hpp"
#include "g_series_table.hpp"

namespace cff {

namespace {

Term sum_of(const std::vector<Term>& parts) {
  if (parts.empty()) return 0;
  Term acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = acc + parts[i];
  return acc;
}

Term scaled(std::uint64_t coeff, Term t) {
  if (coeff == 1) return t;
  return Term(coeff) * std::move(t);
}

Term power_of(const Term& base, std::uint64_t e) {
  if (e == 1) return base;
  return pow(base, Term(e));
}

Term q_one_branch(unsigned r, const Term& t) {
  switch (r) {
    case 0:
      return t;
    case 1:
      return t * monus(t, 1) / 2;
    case 2:
      return t * monus(t, 1) * monus(Term(2) * t, 1) / 6;
    case 4: {
      const Term m = monus(t, 1);
      return m * (m + 1) * (Term(2) * m + 1) * monus(Term(3) * m * m + Term(3) * m, 1) / 30;
    }
    default:
      throw DomainError("no closed form for G_" + std::to_string(r));
  }
}

Term closed_branch(unsigned r, const Term& q, const Term& t) {
  const Term q_minus_1 = monus(q, 1);
  if (r == 0) return monus(pow(q, t), 1) / q_minus_1;
  const auto* form = detail::g_closed_form(r);
  if (form == nullptr) throw DomainError("no closed form for G_" + std::to_string(r));

  const Term t1 = monus(t, 1);
  std::vector<Term> positive, negative;
  for (const auto& sp : form->shifted) {
    const Term q_pow = sp.shift == 0 ? pow(q, t1) : pow(q, t1 + Term(sp.shift));
    for (std::size_t i = 0; i < sp.poly.size(); ++i) {
      const long c = sp.poly[i];
      if (c == 0) continue;
      Term mono = i == 0 ? q_pow : power_of(t1, i) * q_pow;
      const std::uint64_t mag = static_cast<std::uint64_t>(c < 0 ? -c : c);
      (c > 0 ? positive : negative).push_back(scaled(mag, std::move(mono)));
    }
  }
  for (const auto& cp : form->constants) {
    const std::uint64_t mag = static_cast<std::uint64_t>(cp.coeff < 0 ? -cp.coeff : cp.coeff);
    Term mono = cp.power == 0 ? Term(mag) : scaled(mag, power_of(q, cp.power));
    (cp.coeff > 0 ? positive : negative).push_back(std::move(mono));
  }
  Term bracket = monus(sum_of(positive), sum_of(negative));
  if (form->lead > 0) bracket = power_of(q, form->lead) * bracket;
  return bracket / power_of(q_minus_1, form->denominator);
}

}  // namespace

Term binom1_term(const Term& a, const Term& b) {
  return pow(pow2(a) + 1, a) / pow2(a * b) % pow2(a);
}

Term binom2_term(const Term& a, const Term& b) {
  const Term block = Term(2) * (a + 2);
  const Term numerator = pow2(block * ((a + 1) * (a + 1) + b + 1));
  const Term denominator = monus(monus(pow2(block * (a + 2)), pow2(block)), 1);
  return numerator / denominator % pow2(block);
}

Term gcd_term_term(const Term& a, const Term& b) {
  const Term ab = a * b;
  const Term numerator = pow2(ab * (ab + a + b));
  const Term denominator = monus(pow2(a * a * b), 1) * monus(pow2(a * b * b), 1);
  return monus(numerator / denominator % pow2(ab), 1);
}

Term nu2_term(const Term& n, EmitMode mode) {
  const Term g = mode == EmitMode::Pure ? gcd_term_term(n, pow2(n)) : Term::call(std::string(kGcd), {n, pow2(n)});
  const Term mersenne = monus(pow2(n + 1), 1);
  return pow(g, n + 1) % pow(mersenne, 2) / mersenne;
}

Term hw_term(const Term& n, EmitMode mode) { return nu2_term(binom1_term(Term(2) * n, n), mode); }

Term factorial_term_term(const Term& n) {
  return pow(Term(8), n * n * n) / binom1_term(pow(Term(8), n * n), n);
}

Term delta_term(const Term& a, const Term& b) { return monus(pow2(b), 1) * (monus(pow2(b), a) + 1); }

Term g_series_term(unsigned r, const Term& q, const Term& t, bool q_may_be_one) {
  Term closed = closed_branch(r, q, t);
  if (!q_may_be_one) return closed;
  return closed + monus(1, monus(q, 1)) * q_one_branch(r, t);
}

Term pow_lemma_term(const Term& x, const Term& m) {
  return pow2(Term(3) * m * m * x) % monus(pow2(Term(3) * m * x), x);
}

Term emit_term(Formula f, EmitMode mode) {
  const Term n = Term::var("n");
  const Term a = Term::var("a");
  const Term b = Term::var("b");
  switch (f.id) {
    case FormulaId::Hw: return hw_term(n, mode);
    case FormulaId::Nu2: return nu2_term(n, mode);
    case FormulaId::GcdTerm: return gcd_term_term(a, b);
    case FormulaId::Binom1: return binom1_term(a, b);
    case FormulaId::Binom2: return binom2_term(a, b);
    case FormulaId::FactorialTerm: return factorial_term_term(n);
    case FormulaId::Delta: return delta_term(a, b);
    case FormulaId::GSeries: return g_series_term(f.r, Term::var("q"), Term::var("t"), true);
    case FormulaId::PowLemma: return pow_lemma_term(Term::var("x"), Term::var("m"));
    case FormulaId::Chi: return m_term(chi_symbolic());
    case FormulaId::Omega: return m_term(omega_symbolic());
  }
  throw DomainError("unknown formula");
}

namespace {

const Natural& param(const Env& env, const std::string& name) {
  auto it = env.find(name);
  if (it == env.end()) throw UnboundVariable(name);
  return it->second;
}

std::uint64_t small_param(const Env& env, const std::string& name) { return to_u64(param(env, name), name); }

}  // namespace

Natural formula_value(Formula f, const Env& params, const Limits& limits) {
  switch (f.id) {
    case FormulaId::Hw: return Natural(static_cast<unsigned long>(hw(param(params, "n"))));
    case FormulaId::Nu2:
      return Natural(static_cast<unsigned long>(nu2(param(params, "n"), Backend::Native, limits)));
    case FormulaId::GcdTerm: return gcd_term(small_param(params, "a"), small_param(params, "b"), limits);
    case FormulaId::Binom1: return binom1(small_param(params, "a"), small_param(params, "b"), limits);
    case FormulaId::Binom2: return binom2(small_param(params, "a"), small_param(params, "b"), limits);
    case FormulaId::FactorialTerm: return factorial_term(small_param(params, "n"), Backend::FullTerm, limits);
    case FormulaId::Delta: return delta(param(params, "a"), small_param(params, "b"));
    case FormulaId::GSeries: return g_series(f.r, param(params, "q"), small_param(params, "t"), limits);
    case FormulaId::PowLemma: return pow_lemma(param(params, "x"), small_param(params, "m"), limits);
    case FormulaId::Chi: return build_M(chi_spec(small_param(params, "n")), limits);
    case FormulaId::Omega: return build_M(omega_spec(small_param(params, "n")), limits);
  }
  throw DomainError("unknown formula");
}

}  // namespace cff
