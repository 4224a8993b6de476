#pragma once

// Arithmetic-term language over the naturals: constants, variables, +, monus,
// *, floor division, mod and exponentiation, plus a small set of reserved
// native calls used by hybrid pipelines.

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cff/bigint.hpp"
#include "cff/limits.hpp"

namespace cff {

enum class Op : std::uint8_t { Const, Var, Add, Monus, Mul, Div, Mod, Pow, Call };

/// Reserved call names accepted in hybrid terms.
inline constexpr std::string_view kFloorRoot = "floor_root";  // floor_root(m, n)
inline constexpr std::string_view kFactorial = "factorial";   // factorial(n)
inline constexpr std::string_view kGcd = "gcd";               // gcd(a, b)

bool is_reserved_call(std::string_view name);
/// Number of arguments a reserved call takes; 0 if `name` is not reserved.
std::size_t reserved_arity(std::string_view name);

/// Immutable term node handle. Copies share structure; equality is structural.
class Term {
 public:
  /// Constant literal. Implicit so that builder expressions read naturally.
  Term(std::uint64_t value);  // NOLINT(google-explicit-constructor)

  static Term constant(Natural value);
  static Term var(std::string name);
  static Term binary(Op op, Term lhs, Term rhs);
  static Term call(std::string name, std::vector<Term> args);

  Op op() const noexcept;
  const Natural& value() const;      // Const only
  const std::string& name() const;   // Var and Call only
  std::span<const Term> children() const noexcept;
  const Term& lhs() const;
  const Term& rhs() const;

  /// Identity of the underlying node; shared subterms compare equal here.
  const void* id() const noexcept { return node_.get(); }
  bool shared() const noexcept { return node_.use_count() > 1; }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Term operator+(Term a, Term b);
Term operator*(Term a, Term b);
Term operator/(Term a, Term b);
Term operator%(Term a, Term b);
Term monus(Term a, Term b);
Term pow(Term base, Term exponent);
Term pow2(Term exponent);

using Env = std::map<std::string, Natural, std::less<>>;

struct TermStats {
  std::uint64_t node_count = 0;
  std::uint64_t depth = 0;
  std::uint64_t pow_count = 0;
  friend bool operator==(const TermStats&, const TermStats&) = default;
};

/// Observations gathered during one evaluation.
struct EvalStats {
  std::uint64_t max_bits = 0;  // bit length of the largest intermediate value
  std::uint64_t evaluations = 0;
};

struct ParseOptions {
  /// Accept reserved call nodes (floor_root, factorial, gcd).
  bool allow_calls = true;
};

Term parse(std::string_view text, ParseOptions options = {});

/// Canonical text with minimal parentheses; parse(render(t)) == t.
std::string render(const Term& t);

/// Exact value. Monus saturates at 0, a / 0 = 0, a % 0 = a, 0 ^ 0 = 1.
/// Throws UnboundVariable, CapacityError (bit budget), or DomainError
/// (reserved calls outside their domain).
Natural evaluate(const Term& t, const Env& env, const Limits& limits = {}, EvalStats* stats = nullptr);

TermStats stats(const Term& t);

/// Sorted, de-duplicated free variable names.
std::vector<std::string> free_variables(const Term& t);

/// Replaces variables by terms; unmapped variables are kept.
Term substitute(const Term& t, const std::map<std::string, Term, std::less<>>& bindings);

bool has_calls(const Term& t);

}  // namespace cff
