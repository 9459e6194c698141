#include "doctest.h"

#include "cremona/field.hpp"

using namespace cremona;

TEST_CASE("multiplicative relation lattice of rational pairs") {
  auto Q = FieldSpec::rationals();
  auto a4 = FieldElem::from_integer(Q, 4);
  auto a2 = FieldElem::from_integer(Q, 2);
  auto L = relation_lattice(a4, a2);
  REQUIRE(L.rank() == 1);
  REQUIRE(L.basis.size() == 1);
  CHECK(L.basis[0][0] == 1);
  CHECK(L.basis[0][1] == -2);

  // 2 and 3 are multiplicatively independent
  auto a3 = FieldElem::from_integer(Q, 3);
  CHECK(relation_lattice(a2, a3).rank() == 0);
}

TEST_CASE("relation lattice of torsion elements is full rank") {
  auto Q6 = FieldSpec::cyclotomic(6);
  auto z6 = FieldElem::zeta(Q6);
  auto z3 = z6 * z6;
  auto L = relation_lattice(z3, z6);
  REQUIRE(L.rank() == 2);
  CHECK(L.basis[0][0] == 1);
  CHECK(L.basis[0][1] == 4);
  CHECK(L.basis[1][0] == 0);
  CHECK(L.basis[1][1] == 6);
}

TEST_CASE("multiplicative orders of roots of unity") {
  auto Q6 = FieldSpec::cyclotomic(6);
  auto z6 = FieldElem::zeta(Q6);
  CHECK(multiplicative_order(z6) == 6ul);
  CHECK(multiplicative_order(z6 * z6) == 3ul);
  CHECK(multiplicative_order(-z6).value() == 3ul);
  CHECK(!multiplicative_order(FieldElem::from_integer(Q6, 2)));
}

TEST_CASE("nth roots inside the field") {
  auto Q = FieldSpec::rationals();
  auto r = nth_root_in_field(FieldElem::from_integer(Q, 4), 2);
  REQUIRE(r.has_value());
  CHECK(r->to_string() == "2");
  CHECK(!nth_root_in_field(FieldElem::from_integer(Q, 2), 2));

  auto Q9 = FieldSpec::cyclotomic(9);
  auto z9 = FieldElem::zeta(Q9);
  auto rt = nth_root_in_field(z9.pow(3), 3);
  REQUIRE(rt.has_value());
  CHECK(rt->pow(3) == z9.pow(3));
  CHECK(rt->to_string() == "zeta_9^4");

  auto F7 = FieldSpec::prime_field(7);
  auto rr = nth_root_in_field(FieldElem::from_integer(F7, 2), 2);
  REQUIRE(rr.has_value());
  CHECK((rr->res() == 3 || rr->res() == 4));
}

TEST_CASE("torsion generators have the full torsion order") {
  auto Q9 = FieldSpec::cyclotomic(9);
  auto g9 = FieldElem::torsion_generator(Q9);
  CHECK(Q9.torsion_order() == 18ul);
  CHECK(multiplicative_order(g9).value() == 18ul);

  auto F7 = FieldSpec::prime_field(7);
  auto t3 = FieldElem::from_integer(F7, 3);
  CHECK(multiplicative_order(t3).value() == 6ul);
  CHECK(FieldElem::torsion_generator(F7) == t3);
}

TEST_CASE("inverse round trips in the power basis") {
  auto Q9 = FieldSpec::cyclotomic(9);
  auto z9 = FieldElem::zeta(Q9);
  auto e = z9 + z9 * z9 - FieldElem::from_integer(Q9, 3);
  CHECK((e * e.inverse()).is_one());
}

TEST_CASE("galois twist raises the generator to the chosen power") {
  auto Q9 = FieldSpec::cyclotomic(9);
  auto z9 = FieldElem::zeta(Q9);
  CHECK(galois_twist(z9, 2) == z9.pow(2));
  auto sum = z9 + FieldElem::from_integer(Q9, 1);
  CHECK(galois_twist(sum, 2) == z9.pow(2) + FieldElem::from_integer(Q9, 1));
}

TEST_CASE("splitting an element as rational times root of unity") {
  auto Q = FieldSpec::rationals();
  auto s = split_rational_times_root(FieldElem::from_rational(Q, mpq_class(-3, 2)));
  REQUIRE(s.has_value());
  CHECK(s->rational == mpq_class(3, 2));
  CHECK(s->power == 1);

  auto Q4 = FieldSpec::cyclotomic(4);
  auto i = FieldElem::zeta(Q4);
  auto sm = split_rational_times_root(-i * FieldElem::from_integer(Q4, 5));
  REQUIRE(sm.has_value());
  CHECK(sm->rational == 5);
  CHECK(sm->power == 3);
}

TEST_CASE("sqrt(2) in the eighth cyclotomic field is not rational times root") {
  auto Q8 = FieldSpec::cyclotomic(8);
  auto z8 = FieldElem::zeta(Q8);
  auto sqrt2 = z8 + z8.inverse();
  CHECK(sqrt2 * sqrt2 == FieldElem::from_integer(Q8, 2));
  CHECK(!split_rational_times_root(sqrt2));
}

TEST_CASE("field spec parsing and printing round trip") {
  CHECK(FieldSpec::parse("Q").to_string() == "Q");
  CHECK(FieldSpec::parse("Qzeta:8").to_string() == "Qzeta:8");
  CHECK(FieldSpec::parse("Fp:7").to_string() == "Fp:7");
  CHECK(FieldSpec::parse("Qzeta:8").torsion_order() == 8ul);
  CHECK(FieldSpec::parse("Qzeta:9").torsion_order() == 18ul);
  CHECK_THROWS_AS(FieldSpec::parse("Fp:9"), calc_error);
  CHECK_THROWS_AS(FieldSpec::parse("R"), calc_error);
}

TEST_CASE("requesting a missing root of unity reports the field as too small") {
  auto Q = FieldSpec::rationals();
  CHECK(FieldElem::root_of_unity(Q, 2).to_string() == "-1");
  CHECK_THROWS_AS(FieldElem::root_of_unity(Q, 3), calc_error);
  try {
    FieldElem::root_of_unity(Q, 3);
  } catch (const calc_error& e) {
    CHECK(e.code() == errc::field_too_small);
  }
}
