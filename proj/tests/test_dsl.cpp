#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

#include "kenso/dsl.hpp"
#include "kenso/error.hpp"

#include <random>

using namespace kenso;

namespace {

Error capture(const std::string& text) {
  try {
    parse_manifold_dsl(text);
  } catch (const Error& e) {
    return e;
  }
  return Error(errc::unknown_name, "no error raised");
}

}  // namespace

TEST_CASE("builtin sources parse and build") {
  for (const auto& [name, source] : builtin_manifolds()) {
    ManifoldDocument doc = parse_manifold_dsl(source);
    FramedManifold m = build_manifold(doc);
    CHECK(m.dim() == doc.dim);
    CHECK(m.dim() % 2 == 1);
  }
  ManifoldDocument doc = parse_manifold_dsl(builtin_source("kenmotsu5"));
  CHECK(doc.dim == 5);
  CHECK(doc.coords == std::vector<std::string>{"x", "y", "z", "u", "v"});
  CHECK(doc.xi_name == "e5");
  CHECK(doc.vectors.size() == 2);
  CHECK(doc.functions.size() == 1);
  CHECK_THROWS_AS(builtin_source("nope"), Error);
}

TEST_CASE("parse errors carry positions") {
  Error arity = capture("dim 5\ncoords x y z u\n");
  CHECK(arity.code() == errc::parse_error);
  REQUIRE(arity.pos().has_value());
  CHECK(arity.pos()->line == 2);

  Error undeclared = capture(
      "dim 3\ncoords x y v\nframe e1 = exp(-1*w) d x\nframe e2 = 1 d y\nframe e3 = 1 d v\nxi e3\n"
      "phi e1 -> e2\nphi e2 -> -e1\nphi e3 -> 0\n");
  CHECK(undeclared.code() == errc::undeclared_coordinate);
  CHECK(undeclared.pos()->line == 3);

  Error unknown_directive = capture("dim 3\ncoords x y v\nfame e1 = 1 d x\n");
  CHECK(unknown_directive.code() == errc::parse_error);
  CHECK(unknown_directive.pos()->line == 3);
  CHECK(unknown_directive.pos()->column == 1);

  Error duplicate = capture("dim 3\ndim 5\n");
  CHECK(duplicate.code() == errc::duplicate_directive);

  Error bad_xi = capture(
      "dim 3\ncoords x y v\nframe e1 = 1 d x\nframe e2 = 1 d y\nframe e3 = 1 d v\nxi e9\n");
  CHECK(bad_xi.code() == errc::undeclared_frame_field);
  CHECK(bad_xi.pos()->line == 6);

  Error order = capture("coords x y v\n");
  CHECK(order.code() == errc::parse_error);
}

TEST_CASE("multi-term and signed vector lines") {
  ManifoldDocument doc = parse_manifold_dsl(
      "dim 3\ncoords x y v\nframe e1 = exp(-1*v) d x\nframe e2 = exp(-1*v) d y\n"
      "frame e3 = 1 d v\nmetric identity\nxi e3\nphi e1 -> e2\nphi e2 -> -e1\nphi e3 -> 0\n"
      "vector W = x + y d x - 2 d y + d v\n");
  const VectorLine* w = doc.find_vector("W");
  REQUIRE(w != nullptr);
  REQUIRE(w->terms.size() == 3);
  CHECK(w->terms[0].coeff == CoeffExpr::parse("x + y"));
  CHECK(w->terms[0].coord == 0);
  CHECK(w->terms[1].coeff == CoeffExpr(-2));
  CHECK(w->terms[1].coord == 1);
  CHECK(w->terms[2].coeff == CoeffExpr(1));
  CHECK(w->terms[2].coord == 2);
}

TEST_CASE("multi-term frame lines are rejected at build") {
  ManifoldDocument doc = parse_manifold_dsl(
      "dim 3\ncoords x y v\nframe e1 = 1 d x + 1 d y\nframe e2 = 1 d y\nframe e3 = 1 d v\n"
      "xi e3\nphi e1 -> e2\nphi e2 -> -e1\nphi e3 -> 0\n");
  CHECK_THROWS_AS(build_manifold(doc), Error);
}

TEST_CASE("missing phi line is rejected at build") {
  ManifoldDocument doc = parse_manifold_dsl(
      "dim 3\ncoords x y v\nframe e1 = 1 d x\nframe e2 = 1 d y\nframe e3 = 1 d v\n"
      "xi e3\nphi e1 -> e2\nphi e2 -> -e1\n");
  try {
    build_manifold(doc);
    FAIL("expected BadPhiShape");
  } catch (const Error& e) {
    CHECK(e.code() == errc::bad_phi_shape);
  }
}

TEST_CASE("explicit metric rows") {
  ManifoldDocument doc = parse_manifold_dsl(
      "dim 3\ncoords x y v\nframe e1 = 1 d x\nframe e2 = 1 d y\nframe e3 = 1 d v\n"
      "metric 2 0 0 ; 0 1 0 ; 0 0 1\nxi e3\nphi e1 -> e2\nphi e2 -> -e1\nphi e3 -> 0\n");
  REQUIRE(doc.metric.has_value());
  CHECK((*doc.metric)[0][0] == 2);
  FramedManifold m = build_manifold(doc);
  CHECK(m.metric()[0][0] == 2);
  CHECK(m.metric_inverse()[0][0] == Rational(1, 2));
}

TEST_CASE("document round trip") {
  for (const auto& [name, source] : builtin_manifolds()) {
    ManifoldDocument doc = parse_manifold_dsl(source);
    ManifoldDocument again = parse_manifold_dsl(doc.to_dsl());
    CHECK(doc.structurally_equal(again));
    CHECK(again.structurally_equal(doc));
  }
}

TEST_CASE("parser copes with arbitrary bytes") {
  std::mt19937 rng(1234567);
  std::uniform_int_distribution<int> len(0, 200);
  std::uniform_int_distribution<int> byte(0, 255);
  const std::string seed_source = builtin_source("kenmotsu5");
  int parsed_ok = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::string text;
    if (trial % 2 == 0) {
      for (int i = len(rng); i > 0; --i) text.push_back(static_cast<char>(byte(rng)));
    } else {
      // mutated valid source
      text = seed_source;
      for (int i = 0; i < 8; ++i)
        text[static_cast<std::size_t>(rng() % text.size())] = static_cast<char>(byte(rng));
    }
    try {
      parse_manifold_dsl(text);
      ++parsed_ok;
    } catch (const Error&) {
      // structured failure is the contract
    }
  }
  CHECK(parsed_ok >= 0);
}
