#include <algorithm>
#include <set>
#include <unordered_map>

#include "cff/errors.hpp"
#include "cff/term.hpp"

namespace cff {

struct Term::Node {
  Op op;
  Natural value;
  std::string name;
  std::vector<Term> children;
};

namespace {

int precedence(Op op) {
  switch (op) {
    case Op::Add:
    case Op::Monus:
      return 1;
    case Op::Mul:
    case Op::Div:
    case Op::Mod:
      return 2;
    case Op::Pow:
      return 3;
    default:
      return 4;
  }
}

std::string_view symbol(Op op) {
  switch (op) {
    case Op::Add: return "+";
    case Op::Monus: return "-.";
    case Op::Mul: return "*";
    case Op::Div: return "/";
    case Op::Mod: return "%";
    case Op::Pow: return "^";
    default: return "?";
  }
}

bool is_binary(Op op) { return op != Op::Const && op != Op::Var && op != Op::Call; }

}  // namespace

bool is_reserved_call(std::string_view name) { return reserved_arity(name) != 0; }

std::size_t reserved_arity(std::string_view name) {
  if (name == kFloorRoot || name == kGcd) return 2;
  if (name == kFactorial) return 1;
  return 0;
}

Term::Term(std::uint64_t value) : Term(constant(Natural(static_cast<unsigned long>(value)))) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
}

Term Term::constant(Natural value) {
  if (sgn(value) < 0) throw DomainError("term constants must be natural numbers");
  return Term(std::make_shared<const Node>(Node{Op::Const, std::move(value), {}, {}}));
}

Term Term::var(std::string name) {
  if (name.empty()) throw DomainError("empty variable name");
  return Term(std::make_shared<const Node>(Node{Op::Var, {}, std::move(name), {}}));
}

Term Term::binary(Op op, Term lhs, Term rhs) {
  if (!is_binary(op)) throw DomainError("Term::binary needs a binary operator");
  return Term(std::make_shared<const Node>(Node{op, {}, {}, {std::move(lhs), std::move(rhs)}}));
}

Term Term::call(std::string name, std::vector<Term> args) {
  const std::size_t arity = reserved_arity(name);
  if (arity == 0) throw DomainError("'" + name + "' is not a reserved call");
  if (args.size() != arity)
    throw DomainError("'" + name + "' takes " + std::to_string(arity) + " argument(s)");
  return Term(std::make_shared<const Node>(Node{Op::Call, {}, std::move(name), std::move(args)}));
}

Op Term::op() const noexcept { return node_->op; }

const Natural& Term::value() const {
  if (node_->op != Op::Const) throw DomainError("value() on a non-constant term");
  return node_->value;
}

const std::string& Term::name() const {
  if (node_->op != Op::Var && node_->op != Op::Call) throw DomainError("name() on a term without a name");
  return node_->name;
}

std::span<const Term> Term::children() const noexcept { return node_->children; }

const Term& Term::lhs() const {
  if (!is_binary(node_->op)) throw DomainError("lhs() on a non-binary term");
  return node_->children[0];
}

const Term& Term::rhs() const {
  if (!is_binary(node_->op)) throw DomainError("rhs() on a non-binary term");
  return node_->children[1];
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.op != y.op || x.children.size() != y.children.size()) return false;
  if (x.op == Op::Const) return x.value == y.value;
  if ((x.op == Op::Var || x.op == Op::Call) && x.name != y.name) return false;
  return std::equal(x.children.begin(), x.children.end(), y.children.begin());
}

Term operator+(Term a, Term b) { return Term::binary(Op::Add, std::move(a), std::move(b)); }
Term operator*(Term a, Term b) { return Term::binary(Op::Mul, std::move(a), std::move(b)); }
Term operator/(Term a, Term b) { return Term::binary(Op::Div, std::move(a), std::move(b)); }
Term operator%(Term a, Term b) { return Term::binary(Op::Mod, std::move(a), std::move(b)); }
Term monus(Term a, Term b) { return Term::binary(Op::Monus, std::move(a), std::move(b)); }
Term pow(Term base, Term exponent) { return Term::binary(Op::Pow, std::move(base), std::move(exponent)); }
Term pow2(Term exponent) { return pow(Term(2), std::move(exponent)); }

namespace {

void render_into(const Term& t, std::string& out) {
  switch (t.op()) {
    case Op::Const:
      out += t.value().get_str(10);
      return;
    case Op::Var:
      out += t.name();
      return;
    case Op::Call: {
      out += t.name();
      out += '(';
      bool first = true;
      for (const Term& c : t.children()) {
        if (!first) out += ", ";
        first = false;
        render_into(c, out);
      }
      out += ')';
      return;
    }
    default:
      break;
  }
  const int p = precedence(t.op());
  const int pl = precedence(t.lhs().op());
  const int pr = precedence(t.rhs().op());
  // '^' is right-associative, everything else left-associative.
  const bool paren_left = t.op() == Op::Pow ? pl <= p : pl < p;
  const bool paren_right = t.op() == Op::Pow ? pr < p : pr <= p;

  if (paren_left) out += '(';
  render_into(t.lhs(), out);
  if (paren_left) out += ')';
  out += ' ';
  out += symbol(t.op());
  out += ' ';
  if (paren_right) out += '(';
  render_into(t.rhs(), out);
  if (paren_right) out += ')';
}

}  // namespace

std::string render(const Term& t) {
  std::string out;
  render_into(t, out);
  return out;
}

TermStats stats(const Term& t) {
  std::unordered_map<const void*, TermStats> memo;
  auto visit = [&](auto&& self, const Term& node) -> TermStats {
    if (auto it = memo.find(node.id()); it != memo.end()) return it->second;
    TermStats s{1, 1, node.op() == Op::Pow ? 1u : 0u};
    std::uint64_t deepest = 0;
    for (const Term& c : node.children()) {
      const TermStats cs = self(self, c);
      s.node_count = sat_add(s.node_count, cs.node_count);
      s.pow_count = sat_add(s.pow_count, cs.pow_count);
      deepest = std::max(deepest, cs.depth);
    }
    s.depth += deepest;
    memo.emplace(node.id(), s);
    return s;
  };
  return visit(visit, t);
}

std::vector<std::string> free_variables(const Term& t) {
  std::set<std::string> names;
  std::set<const void*> seen;
  auto visit = [&](auto&& self, const Term& node) -> void {
    if (!seen.insert(node.id()).second) return;
    if (node.op() == Op::Var) names.insert(node.name());
    for (const Term& c : node.children()) self(self, c);
  };
  visit(visit, t);
  return {names.begin(), names.end()};
}

Term substitute(const Term& t, const std::map<std::string, Term, std::less<>>& bindings) {
  std::unordered_map<const void*, Term> memo;
  auto visit = [&](auto&& self, const Term& node) -> Term {
    if (auto it = memo.find(node.id()); it != memo.end()) return it->second;
    Term out = node;
    switch (node.op()) {
      case Op::Const:
        break;
      case Op::Var:
        if (auto b = bindings.find(node.name()); b != bindings.end()) out = b->second;
        break;
      case Op::Call: {
        std::vector<Term> args;
        for (const Term& c : node.children()) args.push_back(self(self, c));
        out = Term::call(node.name(), std::move(args));
        break;
      }
      default:
        out = Term::binary(node.op(), self(self, node.lhs()), self(self, node.rhs()));
        break;
    }
    memo.emplace(node.id(), out);
    return out;
  };
  return visit(visit, t);
}

bool has_calls(const Term& t) {
  std::set<const void*> seen;
  auto visit = [&](auto&& self, const Term& node) -> bool {
    if (node.op() == Op::Call) return true;
    if (!seen.insert(node.id()).second) return false;
    for (const Term& c : node.children())
      if (self(self, c)) return true;
    return false;
  };
  return visit(visit, t);
}

}  // namespace cff
