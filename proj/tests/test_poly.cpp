#include "doctest.h"

#include "cremona/poly.hpp"
#include "cremona/ratfunc.hpp"

using namespace cremona;

namespace {

Poly qx() { return Poly::x(FieldSpec::rationals()); }
Poly qc(long n) {
  return Poly::constant(FieldElem::from_integer(FieldSpec::rationals(), n));
}

} // namespace

TEST_CASE("squarefree decomposition separates multiplicities") {
  auto X = qx();
  Poly f = (X + qc(1)).pow(2) * (X - qc(2)).pow(3) * X;
  auto sq = squarefree_decomposition(f);
  REQUIRE(sq.size() == 3);
  CHECK(sq[0].second == 1);
  CHECK(sq[0].first.to_string() == "x");
  CHECK(sq[1].second == 2);
  CHECK(sq[1].first.to_string() == "x + 1");
  CHECK(sq[2].second == 3);
  CHECK(sq[2].first.to_string() == "x - 2");
}

TEST_CASE("squarefree decomposition handles multiplicity divisible by char") {
  auto F5 = FieldSpec::prime_field(5);
  Poly h = Poly::x(F5).pow(2) * (Poly::x(F5) + Poly::constant(FieldElem::one(F5))).pow(5);
  auto sh = squarefree_decomposition(h);
  REQUIRE(sh.size() == 2);
  CHECK(sh[0].second == 2);
  CHECK(sh[1].second == 5);
  CHECK(roots_in_field(h).roots.size() == 2);
}

TEST_CASE("root finding lists roots with multiplicity and flags the rest") {
  auto X = qx();
  Poly f = (X + qc(1)).pow(2) * (X - qc(2)).pow(3) * X;
  auto rl = roots_in_field(f);
  REQUIRE(rl.roots.size() == 3);
  CHECK(rl.unresolved.empty());
  CHECK(rl.roots[0].first.to_string() == "0");
  CHECK(rl.roots[0].second == 1);
  CHECK(rl.roots[1].first.to_string() == "-1");
  CHECK(rl.roots[1].second == 2);
  CHECK(rl.roots[2].first.to_string() == "2");
  CHECK(rl.roots[2].second == 3);

  Poly g = X * X + qc(1);
  auto rg = roots_in_field(g);
  CHECK(rg.roots.empty());
  CHECK(rg.unresolved.size() == 1);

  auto Q4 = FieldSpec::cyclotomic(4);
  Poly g4 = Poly::x(Q4) * Poly::x(Q4) + Poly::constant(FieldElem::one(Q4));
  auto rg4 = roots_in_field(g4);
  CHECK(rg4.roots.size() == 2);
  CHECK(rg4.unresolved.empty());
}

TEST_CASE("rational function square root with three-valued verdict") {
  auto X = qx();
  RatFunc r(qc(9) * (X + qc(1)).pow(2), X.pow(4));
  auto sr = ratfunc_square_root(r);
  REQUIRE(sr.verdict == Ternary::yes);
  CHECK(sr.root->to_string() == "(3*x + 3)/x^2");
  CHECK(*sr.root * *sr.root == r);

  // odd multiplicity rules a square root out
  CHECK(ratfunc_square_root(RatFunc::from_poly(X)).verdict == Ternary::no);

  // over Qzeta:8 the leading constant 2 has a square root that is not a
  // rational multiple of a root of unity, so the scan cannot decide
  auto Q8 = FieldSpec::cyclotomic(8);
  RatFunc u8(Poly::constant(FieldElem::from_integer(Q8, 2)) * Poly::x(Q8).pow(2),
             Poly::constant(FieldElem::one(Q8)));
  CHECK(ratfunc_square_root(u8).verdict == Ternary::undecided);
}

TEST_CASE("rational function substitution keeps reduced form") {
  auto X = qx();
  RatFunc fr(X * X + qc(1), X);
  RatFunc invx(qc(1), X);
  auto sub = fr.substitute(invx);
  CHECK(sub == fr);
  CHECK(sub.to_string() == "(x^2 + 1)/x");
}

TEST_CASE("rational function arithmetic cancels common factors") {
  auto X = qx();
  RatFunc a(X * X - qc(1), X + qc(1));
  CHECK(a.to_string() == "x - 1");
  RatFunc b(X, X.pow(3));
  CHECK(b.to_string() == "1/x^2");
  CHECK((a * b).to_string() == "(x - 1)/x^2");
  CHECK(a.map_degree() == 1);
  CHECK(RatFunc(X * X + qc(1), X).map_degree() == 2);
}

TEST_CASE("evaluation and poles") {
  auto Q = FieldSpec::rationals();
  auto X = qx();
  RatFunc fr(X * X + qc(1), X);
  auto at2 = fr.eval(FieldElem::from_integer(Q, 2));
  REQUIRE(at2.has_value());
  CHECK(*at2 == FieldElem::from_rational(Q, mpq_class(5, 2)));
  CHECK(!fr.eval(FieldElem::zero(Q)).has_value());
}

TEST_CASE("derivative follows the quotient rule") {
  auto X = qx();
  RatFunc fr(X * X + qc(1), X);
  // d/dx (x^2+1)/x = (x^2-1)/x^2
  CHECK(fr.derivative() == RatFunc(X * X - qc(1), X * X));
}
