#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

#include "kenso/error.hpp"
#include "kenso/manifold.hpp"

#include <functional>

using namespace kenso;
using kenso::testing::kenmotsu5;

namespace {

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return errc::unknown_name;  // sentinel: nothing was thrown
}

FramedManifold::FrameLeg leg(std::size_t target, const char* scale) {
  return {target, CoeffExpr::parse(scale)};
}

}  // namespace

TEST_CASE("building the 5-dimensional example") {
  const FramedManifold& m = kenmotsu5().manifold;
  CHECK(m.dim() == 5);
  CHECK(m.n() == 2);
  CHECK(m.xi_index() == 4);
  CHECK(m.coords() == std::vector<std::string>{"x", "y", "z", "u", "v"});
}

TEST_CASE("construction rejects bad input") {
  std::vector<std::string> coords{"x", "y", "z", "u"};
  std::vector<FramedManifold::FrameLeg> legs{leg(0, "1"), leg(1, "1"), leg(2, "1"), leg(3, "1")};
  RationalMatrix phi = identity_matrix(4);
  CHECK(code_of([&] { FramedManifold::diagonal(coords, legs, 0, phi); }) ==
        errc::even_dimension);

  std::vector<std::string> coords3{"x", "y", "v"};
  RationalMatrix phi3 = identity_matrix(3);
  CHECK(code_of([&] {
          FramedManifold::diagonal(coords3, {leg(0, "x"), leg(1, "1"), leg(2, "1")}, 2, phi3);
        }) == errc::non_unit_frame_scale);

  RationalMatrix scaled = identity_matrix(3);
  scaled[2][2] = 4;  // eta(xi) = 4
  CHECK(code_of([&] {
          FramedManifold::diagonal(coords3, {leg(0, "1"), leg(1, "1"), leg(2, "1")}, 2, phi3,
                                   scaled);
        }) == errc::xi_not_unit);

  RationalMatrix bad_phi = identity_matrix(4);
  CHECK(code_of([&] {
          FramedManifold::diagonal(coords3, {leg(0, "1"), leg(1, "1"), leg(2, "1")}, 2, bad_phi);
        }) == errc::bad_phi_shape);

  CHECK(code_of([&] {
          FramedManifold::diagonal(coords3, {leg(0, "1"), leg(0, "1"), leg(2, "1")}, 2, phi3);
        }) == errc::invalid_frame);
}

TEST_CASE("frame derivatives on the example") {
  const FramedManifold& m = kenmotsu5().manifold;
  CoeffExpr xev = CoeffExpr::parse("x*exp(1*v)");
  CHECK(m.frame_derivative(0, xev) == CoeffExpr(1));
  CHECK(m.frame_derivative(4, xev) == xev);
  CHECK(m.frame_derivative(1, CoeffExpr::coordinate("x")).is_zero());
}

TEST_CASE("bracket table of the example") {
  const FramedManifold& m = kenmotsu5().manifold;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      FrameVectorField b = m.lie_bracket(m.basis_field(i), m.basis_field(j));
      FrameVectorField expected(5);
      if (i < 4 && j == 4) expected.components[i] = CoeffExpr(1);
      if (i == 4 && j < 4) expected.components[j] = CoeffExpr(-1);
      CHECK(b == expected);
    }
}

TEST_CASE("bracket properties") {
  const FramedManifold& m = kenmotsu5().manifold;
  CHECK(m.jacobi_identity_holds());

  // antisymmetry and agreement of the two bracket routes on non-basis fields
  FrameVectorField a(5), b(5);
  a.components[0] = CoeffExpr::parse("x*exp(1*v)");
  a.components[4] = CoeffExpr(1);
  b.components[1] = CoeffExpr::parse("y^2");
  b.components[2] = CoeffExpr::parse("exp(-1*v)");
  FrameVectorField ab = m.lie_bracket(a, b);
  CHECK(ab == -m.lie_bracket(b, a));
  CHECK(ab == m.lie_bracket_via_structure(a, b));
}

TEST_CASE("coordinate re-expression") {
  const FramedManifold& m = kenmotsu5().manifold;
  CoordinateVectorField dx(5);
  dx.components[0] = CoeffExpr(1);
  FrameVectorField fx = m.to_frame_components(dx);
  CHECK(fx.components[0] == CoeffExpr::parse("exp(1*v)"));

  CoordinateVectorField dv(5);
  dv.components[4] = CoeffExpr(1);
  CHECK(m.to_frame_components(dv) == m.basis_field(4));

  // V = x dx + y dy + z dz + u du + dv
  const VectorLine* v_line = kenmotsu5().doc.find_vector("V");
  REQUIRE(v_line != nullptr);
  FrameVectorField v = m.to_frame_components(coordinate_field(kenmotsu5().doc, *v_line));
  for (std::size_t i = 0; i < 4; ++i) {
    CoeffExpr expected = CoeffExpr::coordinate(m.coords()[i]) * CoeffExpr::parse("exp(1*v)");
    CHECK(v.components[i] == expected);
  }
  CHECK(v.components[4] == CoeffExpr(1));

  // round trip through coordinate components
  CHECK(m.to_frame_components(m.to_coordinate_components(v)) == v);
}

TEST_CASE("contact data") {
  const FramedManifold& m = kenmotsu5().manifold;
  CHECK(m.phi_apply(m.basis_field(0)) == m.basis_field(2));
  CHECK(m.eta(m.xi()) == CoeffExpr(1));
  CHECK(m.eta(m.basis_field(0)).is_zero());
  CHECK(m.phi_apply(m.phi_apply(m.basis_field(0))) == -m.basis_field(0));
  CHECK(m.metric_pairing(m.basis_field(1), m.basis_field(1)) == CoeffExpr(1));
  CHECK(m.metric_pairing(m.basis_field(1), m.basis_field(2)).is_zero());
}

TEST_CASE("structure-function form") {
  // Same bracket table as the 5-dimensional example, given directly.
  const std::size_t dim = 5;
  std::vector<CoeffExpr> c(dim * dim * dim);
  for (std::size_t i = 0; i < 4; ++i) {
    c[(i * dim + 4) * dim + i] = CoeffExpr(1);
    c[(4 * dim + i) * dim + i] = CoeffExpr(-1);
  }
  RationalMatrix phi(dim, std::vector<Rational>(dim, 0));
  phi[2][0] = 1;
  phi[3][1] = 1;
  phi[0][2] = -1;
  phi[1][3] = -1;
  FramedManifold m = FramedManifold::from_structure_functions(dim, c, 4, phi);
  CHECK_FALSE(m.has_coordinate_frame());
  CHECK(m.jacobi_identity_holds());
  CHECK(m.lie_bracket(m.basis_field(0), m.basis_field(4)) == m.basis_field(0));

  // non-constant coefficients cannot be differentiated without coordinates
  FrameVectorField w(dim);
  w.components[0] = CoeffExpr::coordinate("x");
  CHECK_THROWS_AS(m.lie_bracket(w, m.basis_field(4)), Error);

  // antisymmetry of the table is enforced
  std::vector<CoeffExpr> broken = c;
  broken[(4 * dim + 0) * dim + 0] = CoeffExpr(1);
  CHECK_THROWS_AS(FramedManifold::from_structure_functions(dim, broken, 4, phi), Error);
}
