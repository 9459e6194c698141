#include "doctest.h"

#include "cremona/poly.hpp"
#include "cremona/ratfunc.hpp"
#include "cremona/series.hpp"

using namespace cremona;

namespace {

Poly qx() { return Poly::x(FieldSpec::rationals()); }
Poly qc(long n) {
  return Poly::constant(FieldElem::from_integer(FieldSpec::rationals(), n));
}

} // namespace

TEST_CASE("geometric series expansion of 1/(1-x)") {
  auto Q = FieldSpec::rationals();
  RatFunc geo(qc(1), qc(1) - qx());
  auto ts = TruncSeries::from_ratfunc(geo, 5);
  for (unsigned i = 0; i <= 5; ++i) CHECK(ts.coeff(i).is_one());
  auto inv = ts.invert();
  CHECK(inv.coeff(0).is_one());
  CHECK(inv.coeff(1) == -FieldElem::one(Q));
  for (unsigned i = 2; i <= 5; ++i) CHECK(inv.coeff(i).is_zero());
}

TEST_CASE("truncated series arithmetic stays at the common order") {
  auto Q = FieldSpec::rationals();
  auto one = TruncSeries::from_poly(qc(1), 4);
  auto x = TruncSeries::from_poly(qx(), 4);
  auto s = (one + x) * (one - x);
  CHECK(s.coeff(0).is_one());
  CHECK(s.coeff(1).is_zero());
  CHECK(s.coeff(2) == -FieldElem::one(Q));
  CHECK(s.order() == 4);
}

TEST_CASE("series inversion requires a unit constant term") {
  auto x = TruncSeries::from_poly(qx(), 4);
  CHECK_THROWS_AS(x.invert(), calc_error);
}

TEST_CASE("laurent expansion tracks valuation and unit part") {
  auto X = qx();
  RatFunc lf(X.pow(2) + X.pow(3), X.pow(5));
  auto ls = laurent_from_ratfunc(lf, 4);
  CHECK(ls.val == -3);
  CHECK(ls.unit.coeff(0).is_one());
  CHECK(ls.unit.coeff(1).is_one());
  CHECK(ls.to_string() == "x^(-3) * (1 + x + O(x^5))");
}

TEST_CASE("scaling the argument of a laurent series") {
  auto Q = FieldSpec::rationals();
  LaurentSeries lx{-1, TruncSeries::from_poly(qc(1), 3)};
  auto l2 = lx.scale_arg(FieldElem::from_integer(Q, 2));
  CHECK(l2.coeff(-1) == FieldElem::from_rational(Q, mpq_class(1, 2)));
  CHECK(l2.coeff(0).is_zero());

  // positive valuation scales the other way
  LaurentSeries lp{2, TruncSeries::from_poly(qc(1), 3)};
  CHECK(lp.scale_arg(FieldElem::from_integer(Q, 2)).coeff(2) ==
        FieldElem::from_integer(Q, 4));
}
