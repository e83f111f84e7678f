#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

#include "kenso/coeff_expr.hpp"
#include "kenso/error.hpp"

#include <algorithm>

using namespace kenso;
using kenso::testing::ExprGen;

namespace {

CoeffExpr x() { return CoeffExpr::coordinate("x"); }
CoeffExpr y() { return CoeffExpr::coordinate("y"); }
CoeffExpr ev(int w) { return CoeffExpr::exponential("v", Rational(w)); }

}  // namespace

TEST_CASE("ring operations on simple expressions") {
  CHECK(ev(-1) * ev(1) == CoeffExpr(1));
  CHECK(x() * ev(1) + x() * ev(1) == CoeffExpr(2) * x() * ev(1));
  CHECK((x() + y()) + (-x()) == y());
  CHECK((x() - x()).is_zero());
  CHECK(CoeffExpr(0).is_zero());
}

TEST_CASE("partial derivatives") {
  CHECK((x() * ev(1)).derivative("x") == ev(1));
  CHECK(ev(-1).derivative("v") == -ev(-1));
  CHECK(x().derivative("y").is_zero());
  // product of polynomial and exponential factors in one coordinate
  CoeffExpr f = CoeffExpr::parse("x^2*exp(1/2*x)");
  CoeffExpr expected = CoeffExpr::parse("2*x*exp(1/2*x) + 1/2*x^2*exp(1/2*x)");
  CHECK(f.derivative("x") == expected);
}

TEST_CASE("unit inversion") {
  CHECK(ev(-1).inverted_unit() == ev(1));
  CHECK(CoeffExpr(3).inverted_unit() == CoeffExpr(Rational(1, 3)));
  CHECK_THROWS_AS(x().inverted_unit(), Error);
  CHECK_THROWS_AS(CoeffExpr().inverted_unit(), Error);
  try {
    x().inverted_unit();
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_a_unit);
  }
  try {
    CoeffExpr().inverted_unit();
  } catch (const Error& e) {
    CHECK(e.code() == errc::zero_element);
  }
}

TEST_CASE("evaluation at rational points") {
  std::map<std::string, Rational> p1{{"x", 2}, {"v", 0}};
  EvalResult r1 = (x() * ev(1)).evaluate(p1);
  CHECK(r1.exact);
  CHECK(r1.exact_value == 2);

  std::map<std::string, Rational> p2{{"v", 1}};
  EvalResult r2 = ev(-1).evaluate(p2);
  CHECK_FALSE(r2.exact);
  CHECK(r2.decimal(17).substr(0, 10) == "0.36787944");

  EvalResult r3 = CoeffExpr().evaluate(p2);
  CHECK(r3.exact);
  CHECK(r3.exact_value == 0);

  CHECK_THROWS_AS((x() * y()).evaluate(p1), Error);
}

TEST_CASE("surface syntax round trip on fixed cases") {
  for (const char* text : {"0", "1", "-3/2", "x", "x^2", "2*x*exp(1*v)",
                           "-3/2*x^2*exp(-1/2*v) + y - 7", "exp(2*v)*exp(-1*v)"}) {
    CoeffExpr e = CoeffExpr::parse(text);
    CHECK(CoeffExpr::parse(e.str()) == e);
  }
  CHECK(CoeffExpr::parse("exp(2*v)*exp(-1*v)") == ev(1));
  CHECK_THROWS_AS(CoeffExpr::parse("x +"), Error);
  CHECK_THROWS_AS(CoeffExpr::parse("exp(v)"), Error);
  CHECK_THROWS_AS(CoeffExpr::parse(""), Error);
  CHECK_THROWS_AS(CoeffExpr::parse("1/0"), Error);
}

TEST_CASE("canonicalization is idempotent and order-independent") {
  ExprGen gen(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    CoeffExpr a = gen.expr();
    CHECK(CoeffExpr::from_terms(a.terms()) == a);

    // Rebuild from shuffled, split terms.
    std::vector<Term> pieces;
    for (const Term& t : a.terms()) {
      Term half = t;
      half.coeff = t.coeff / 2;
      Term rest = t;
      rest.coeff = t.coeff - half.coeff;
      pieces.push_back(half);
      if (rest.coeff != 0) pieces.push_back(rest);
    }
    std::shuffle(pieces.begin(), pieces.end(), gen.rng());
    CoeffExpr rebuilt;
    for (const Term& t : pieces) rebuilt = rebuilt + CoeffExpr::from_terms({t});
    CHECK(rebuilt == a);
    CHECK((rebuilt - a).is_zero());
  }
}

TEST_CASE("ring axioms on random expressions") {
  ExprGen gen(987654);
  for (int trial = 0; trial < 150; ++trial) {
    CoeffExpr a = gen.expr(), b = gen.expr(), c = gen.expr(3);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + (-a)).is_zero());
    CHECK((a * CoeffExpr()).is_zero());
    CHECK(a * CoeffExpr(1) == a);
  }
}

TEST_CASE("Leibniz rule and commuting partials on random expressions") {
  ExprGen gen(424242);
  for (int trial = 0; trial < 150; ++trial) {
    CoeffExpr a = gen.expr(), b = gen.expr();
    std::string c = gen.coord(), d = gen.coord();
    CHECK((a * b).derivative(c) == a.derivative(c) * b + a * b.derivative(c));
    CHECK(a.derivative(c).derivative(d) == a.derivative(d).derivative(c));
  }
}

TEST_CASE("random units invert exactly") {
  ExprGen gen(777);
  for (int trial = 0; trial < 150; ++trial) {
    CoeffExpr u = gen.unit();
    CHECK(u.inverted_unit() * u == CoeffExpr(1));
  }
}

TEST_CASE("random render/parse round trip") {
  ExprGen gen(31337);
  for (int trial = 0; trial < 150; ++trial) {
    CoeffExpr a = gen.expr();
    CHECK(CoeffExpr::parse(a.str()) == a);
  }
}
