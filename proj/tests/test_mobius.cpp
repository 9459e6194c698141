#include "doctest.h"

#include "cremona/mobius.hpp"

using namespace cremona;

namespace {

FieldElem qi(long n) { return FieldElem::from_integer(FieldSpec::rationals(), n); }

} // namespace

TEST_CASE("mobius composition and inverse round trip") {
  auto Q = FieldSpec::rationals();
  MobiusK m(qi(3), qi(1), qi(1), qi(3));
  CHECK(m.compose(m.inverse()) == MobiusK::identity(Q));
  CHECK(m.inverse().compose(m) == MobiusK::identity(Q));
  CHECK(m.pow(3) == m.compose(m).compose(m));
  CHECK(m.pow(-2) == m.inverse().compose(m.inverse()));
  CHECK(m.pow(0).is_identity());
}

TEST_CASE("projective normalization makes equality literal") {
  MobiusK a(qi(2), qi(0), qi(0), qi(1));
  MobiusK b(qi(4), qi(0), qi(0), qi(2));
  CHECK(a == b);
  CHECK(a == MobiusK::scaling(qi(2)));
  CHECK(MobiusK(qi(0), qi(3), qi(3), qi(0)) == MobiusK::inversion(FieldSpec::rationals()));
}

TEST_CASE("degenerate matrices are rejected") {
  CHECK_THROWS_AS(MobiusK(qi(1), qi(2), qi(2), qi(4)), calc_error);
}

TEST_CASE("application on the projective line moves infinity correctly") {
  auto Q = FieldSpec::rationals();
  // (x + 1) / (x - 1)
  MobiusK m(qi(1), qi(1), qi(1), qi(-1));
  CHECK(m.apply(qi(0)) == P1Point::at(qi(-1)));
  CHECK(m.apply(qi(1)) == P1Point::infinity(Q));
  CHECK(m.apply(P1Point::infinity(Q)) == P1Point::at(qi(1)));
  CHECK(m.as_ratfunc().to_string() == "(x + 1)/(x - 1)");
}

TEST_CASE("projective order detects torsion") {
  auto Q = FieldSpec::rationals();
  CHECK(projective_order(MobiusK::identity(Q)) == 1ul);
  CHECK(projective_order(MobiusK::scaling(qi(-1))) == 2ul);
  CHECK(projective_order(MobiusK::inversion(Q)) == 2ul);
  // trace^2/det = 1: rotation of order 3
  CHECK(projective_order(MobiusK(qi(0), qi(-1), qi(1), qi(1))) == 3ul);
  // trace^2/det = 2: order 4
  CHECK(projective_order(MobiusK(qi(1), qi(-1), qi(1), qi(1))) == 4ul);
  // trace^2/det = 3: order 6
  CHECK(projective_order(MobiusK(qi(2), qi(-1), qi(1), qi(1))) == 6ul);
  CHECK(!projective_order(MobiusK::scaling(qi(2))).has_value());
  CHECK(!projective_order(MobiusK::translation(qi(1))).has_value());

  auto Q4 = FieldSpec::cyclotomic(4);
  CHECK(projective_order(MobiusK::scaling(FieldElem::zeta(Q4))) == 4ul);

  // char p: translation is unipotent of order p
  auto F5 = FieldSpec::prime_field(5);
  CHECK(projective_order(MobiusK::translation(FieldElem::one(F5))) == 5ul);
}

TEST_CASE("fixed points of the basic models") {
  auto Q = FieldSpec::rationals();
  auto fx = fixed_points(MobiusK::scaling(qi(2)));
  REQUIRE(fx.resolved);
  REQUIRE(fx.pts.size() == 2);
  CHECK((fx.pts[0] == P1Point::infinity(Q) || fx.pts[1] == P1Point::infinity(Q)));
  CHECK((fx.pts[0] == P1Point::at(qi(0)) || fx.pts[1] == P1Point::at(qi(0))));

  auto ft = fixed_points(MobiusK::translation(qi(1)));
  REQUIRE(ft.resolved);
  REQUIRE(ft.pts.size() == 1);
  CHECK(ft.pts[0] == P1Point::infinity(Q));

  // (3x + 1)/(x + 3) fixes 1 and -1
  auto fc = fixed_points(MobiusK(qi(3), qi(1), qi(1), qi(3)));
  REQUIRE(fc.resolved);
  REQUIRE(fc.pts.size() == 2);
  CHECK((fc.pts[0] == P1Point::at(qi(1)) || fc.pts[1] == P1Point::at(qi(1))));
  CHECK((fc.pts[0] == P1Point::at(qi(-1)) || fc.pts[1] == P1Point::at(qi(-1))));

  // 1/x over Q fixes +-1... no: x = 1/x gives x^2 = 1, so 1 and -1
  auto fi = fixed_points(MobiusK::inversion(Q));
  REQUIRE(fi.resolved);
  CHECK(fi.pts.size() == 2);

  // -1/x: x^2 = -1 needs i
  auto fm = fixed_points(MobiusK(qi(0), qi(-1), qi(1), qi(0)));
  CHECK(!fm.resolved);
  auto Q4 = FieldSpec::cyclotomic(4);
  auto one4 = FieldElem::one(Q4);
  auto fm4 = fixed_points(MobiusK(FieldElem::zero(Q4), -one4, one4, FieldElem::zero(Q4)));
  CHECK(fm4.resolved);
  CHECK(fm4.pts.size() == 2);

  CHECK(fixed_points(MobiusK::identity(Q)).whole_line);
}

TEST_CASE("iteration model for a diagonal scaling keeps the identity chart") {
  auto rep = base_order_report(MobiusK::scaling(qi(2)));
  REQUIRE(rep.kind == BaseOrderReport::Kind::infinite_multiplicative);
  REQUIRE(rep.multiplier.has_value());
  CHECK(*rep.multiplier == qi(2));
  REQUIRE(rep.coordinate.has_value());
  CHECK(rep.coordinate->is_identity());
}

TEST_CASE("iteration model for a conjugated multiplicative map") {
  // (3x + 1)/(x + 3) has eigenvalue ratio 2 at its fixed points
  MobiusK m(qi(3), qi(1), qi(1), qi(3));
  auto rep = base_order_report(m);
  REQUIRE(rep.kind == BaseOrderReport::Kind::infinite_multiplicative);
  REQUIRE(rep.multiplier.has_value());
  CHECK((*rep.multiplier == qi(2) ||
         *rep.multiplier == FieldElem::from_rational(FieldSpec::rationals(), mpq_class(1, 2))));
  REQUIRE(rep.coordinate.has_value());
  auto& psi = *rep.coordinate;
  CHECK(psi.inverse().compose(m).compose(psi) == MobiusK::scaling(*rep.multiplier));
}

TEST_CASE("iteration model for a parabolic map") {
  MobiusK t = MobiusK::translation(qi(5));
  auto rep = base_order_report(t);
  REQUIRE(rep.kind == BaseOrderReport::Kind::infinite_parabolic);
  REQUIRE(rep.coordinate.has_value());
  auto q1 = qi(1);
  CHECK(rep.coordinate->inverse().compose(t).compose(*rep.coordinate) ==
        MobiusK::translation(q1));

  // x/(x + 1) is parabolic with fixed point 0
  MobiusK p(qi(1), qi(0), qi(1), qi(1));
  auto rp = base_order_report(p);
  REQUIRE(rp.kind == BaseOrderReport::Kind::infinite_parabolic);
  REQUIRE(rp.coordinate.has_value());
  CHECK(rp.coordinate->inverse().compose(p).compose(*rp.coordinate) ==
        MobiusK::translation(q1));
}

TEST_CASE("iteration model reports finite order and unresolved cases") {
  auto rep = base_order_report(MobiusK::inversion(FieldSpec::rationals()));
  CHECK(rep.kind == BaseOrderReport::Kind::finite_order);
  CHECK(rep.order == 2ul);

  // (x - 2)/(x + 1) has infinite order and fixed points with x^2 = -2
  MobiusK m(qi(1), qi(-2), qi(1), qi(1));
  CHECK(!projective_order(m).has_value());
  auto r2 = base_order_report(m);
  CHECK(r2.kind == BaseOrderReport::Kind::unresolved_fixed_points);
}

TEST_CASE("trace squared over determinant is a conjugacy invariant") {
  MobiusK m(qi(3), qi(1), qi(1), qi(3));
  MobiusK g(qi(2), qi(1), qi(0), qi(1));
  auto c = g.inverse().compose(m).compose(g);
  CHECK(m.trace_sq_over_det() == c.trace_sq_over_det());
  CHECK(MobiusK::scaling(qi(2)).trace_sq_over_det() ==
        FieldElem::from_rational(FieldSpec::rationals(), mpq_class(9, 2)));
}
