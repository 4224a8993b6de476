#include <gtest/gtest.h>

#include "cff/errors.hpp"
#include "cff/term.hpp"

using namespace cff;

namespace {

Natural eval(std::string_view text, const Env& env = {}) { return evaluate(parse(text), env); }

}  // namespace

TEST(Eval, MonusSaturatesAtZero) {
  EXPECT_EQ(eval("5 -. 7"), 0);
  EXPECT_EQ(eval("7 -. 5"), 2);
  EXPECT_EQ(eval("5 ∸ 7"), 0);
}

TEST(Eval, Examples) {
  EXPECT_EQ(eval("2^10"), 1024);
  EXPECT_EQ(eval("x*(y+1)", {{"x", 3}, {"y", 4}}), 15);
}

TEST(Eval, DivisionConventions) {
  EXPECT_EQ(eval("7 / 0"), 0);
  EXPECT_EQ(eval("7 % 0"), 7);
  EXPECT_EQ(eval("0 ^ 0"), 1);
  EXPECT_EQ(eval("0 ^ 3"), 0);
  EXPECT_EQ(eval("17 / 5"), 3);
  EXPECT_EQ(eval("17 % 5"), 2);
}

TEST(Eval, PrecedenceAndAssociativity) {
  EXPECT_EQ(eval("2 + 3 * 4"), 14);
  EXPECT_EQ(eval("2 ^ 3 ^ 2"), 512);
  EXPECT_EQ(eval("(2 ^ 3) ^ 2"), 64);
  EXPECT_EQ(eval("10 -. 3 -. 2"), 5);
  EXPECT_EQ(eval("10 -. (3 -. 2)"), 9);
  EXPECT_EQ(eval("100 / 10 / 5"), 2);
  EXPECT_EQ(eval("2 * 3 ^ 2"), 18);
  EXPECT_EQ(eval("17 % 5 * 3"), 6);
}

TEST(Eval, BigValuesAreExact) {
  EXPECT_EQ(eval("2 ^ 200 -. 1").get_str(16), std::string(50, 'f'));
  EXPECT_EQ(eval("(2 ^ 100 + 1) * (2 ^ 100 -. 1) + 1"), pow2(200));
}

TEST(Eval, ReservedCalls) {
  EXPECT_EQ(eval("gcd(10, 6)"), 2);
  EXPECT_EQ(eval("factorial(7)"), 5040);
  EXPECT_EQ(eval("factorial(0)"), 1);
  EXPECT_EQ(eval("floor_root(2, 10)"), 3);
  EXPECT_EQ(eval("floor_root(2, 50)"), 7);
  EXPECT_EQ(eval("floor_root(3, 27)"), 3);
  EXPECT_THROW(eval("floor_root(0, 5)"), DomainError);
}

TEST(Eval, UnboundVariable) {
  try {
    eval("x + 1");
    FAIL();
  } catch (const UnboundVariable& e) {
    EXPECT_EQ(e.name(), "x");
  }
}

TEST(Eval, BitBudget) {
  EXPECT_THROW(eval("2 ^ (2 ^ 30)"), CapacityError);
  EXPECT_THROW(evaluate(parse("3 ^ 100000"), {}, Limits{1000}), CapacityError);
  EXPECT_THROW(evaluate(parse("factorial(100000)"), {}, Limits{1000}), CapacityError);
  EXPECT_NO_THROW(evaluate(parse("2 ^ 999"), {}, Limits{1000}));
  try {
    evaluate(parse("2 ^ 5000"), {}, Limits{1000});
  } catch (const CapacityError& e) {
    EXPECT_EQ(e.budget_bits(), 1000u);
    EXPECT_GT(e.required_bits(), 1000u);
  }
}

TEST(Eval, StatsTrackLargestIntermediate) {
  EvalStats s;
  evaluate(parse("2 ^ 100 / 2 ^ 90"), {}, {}, &s);
  EXPECT_EQ(s.max_bits, 101u);
}

TEST(Eval, SharedSubtermsAreEvaluatedOnce) {
  const Term x = Term::var("x");
  const Term shared = pow(x, 3) + 1;
  const Term t = shared * shared + shared;
  EvalStats s;
  EXPECT_EQ(evaluate(t, {{"x", 2}}, {}, &s), 90);
  const Term tree = parse("(x ^ 3 + 1) * (x ^ 3 + 1) + (x ^ 3 + 1)");
  EvalStats st;
  EXPECT_EQ(evaluate(tree, {{"x", 2}}, {}, &st), 90);
  EXPECT_LT(s.evaluations, st.evaluations);
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse("1 - 2"), ParseError);
  EXPECT_THROW(parse("-3"), ParseError);
  EXPECT_THROW(parse("(1 + 2"), ParseError);
  EXPECT_THROW(parse("1 +"), ParseError);
  EXPECT_THROW(parse("foo(1)"), ParseError);
  EXPECT_THROW(parse("gcd(1)"), ParseError);
  EXPECT_THROW(parse("factorial(1, 2)"), ParseError);
  EXPECT_THROW(parse("1 $ 2"), ParseError);
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("gcd(4, 6)", ParseOptions{false}), ParseError);
}

TEST(Parse, ErrorPosition) {
  try {
    parse("1 + 2 - 3");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
}

TEST(Render, MinimalParentheses) {
  EXPECT_EQ(render(parse("a + (b * c)")), "a + b * c");
  EXPECT_EQ(render(parse("(a + b) * c")), "(a + b) * c");
  EXPECT_EQ(render(parse("2 ^ (3 ^ 2)")), "2 ^ 3 ^ 2");
  EXPECT_EQ(render(parse("(2 ^ 3) ^ 2")), "(2 ^ 3) ^ 2");
  EXPECT_EQ(render(parse("(a -. b) -. c")), "a -. b -. c");
  EXPECT_EQ(render(parse("a -. (b -. c)")), "a -. (b -. c)");
  EXPECT_EQ(render(parse("a / (b * c)")), "a / (b * c)");
  EXPECT_EQ(render(parse("gcd(a+1,b)")), "gcd(a + 1, b)");
  EXPECT_EQ(render(parse("x ∸ y")), "x -. y");
}

TEST(Render, RoundTrip) {
  for (const char* text : {"2 ^ (n + 1) % (2 ^ (n + 1) -. 1) ^ 2 / (2 ^ (n + 1) -. 1)", "a * (b + c) -. d / e",
                           "floor_root(omega, n) + factorial(gcd(a, b))", "((1))", "x ^ y ^ z % 7"}) {
    const Term t = parse(text);
    EXPECT_EQ(parse(render(t)), t) << text;
  }
}

TEST(Stats, CountsTreeNodes) {
  // Add(Pow(2, n), 1): five nodes, depth three, one power.
  EXPECT_EQ(stats(parse("2 ^ n + 1")), (TermStats{5, 3, 1}));
  EXPECT_EQ(stats(parse("x")), (TermStats{1, 1, 0}));
  EXPECT_EQ(stats(parse("gcd(2 ^ a, b)")), (TermStats{5, 3, 1}));
}

TEST(Structure, FreeVariablesSubstituteCalls) {
  const Term t = parse("x * (y + x) + gcd(z, 1)");
  EXPECT_EQ(free_variables(t), (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_TRUE(has_calls(t));
  EXPECT_FALSE(has_calls(parse("x + 1")));
  const Term s = substitute(parse("x * (y + x)"), {{"x", parse("a + 1")}});
  EXPECT_EQ(s, parse("(a + 1) * (y + (a + 1))"));
  EXPECT_EQ(evaluate(s, {{"a", 2}, {"y", 4}}), 21);
}

TEST(Structure, EqualityIsStructural) {
  EXPECT_EQ(parse("1 + x"), Term(1) + Term::var("x"));
  EXPECT_FALSE(parse("1 + x") == parse("x + 1"));
  EXPECT_EQ(is_reserved_call("gcd"), true);
  EXPECT_EQ(reserved_arity("floor_root"), 2u);
  EXPECT_EQ(reserved_arity("sqrt"), 0u);
}
