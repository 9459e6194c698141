#include "doctest.h"

#include "cremona/cremona_map.hpp"

using namespace cremona;

namespace {

struct PlaneVars {
  TriPoly X, Y, Z;
  PlaneVars()
      : X(TriPoly::variable(FieldSpec::rationals(), 0)),
        Y(TriPoly::variable(FieldSpec::rationals(), 1)),
        Z(TriPoly::variable(FieldSpec::rationals(), 2)) {}
};

} // namespace

TEST_CASE("the standard quadratic involution squares to the identity") {
  PlaneVars v;
  CremonaMap sigma(v.Y * v.Z, v.X * v.Z, v.X * v.Y);
  CHECK(sigma.degree() == 2);
  CremonaMap s2 = sigma.compose(sigma);
  CHECK(s2.is_identity());
  CHECK(s2.to_string() == "[X : Y : Z]");
  auto sseq = degree_sequence(sigma, 4);
  CHECK(sseq.degrees == std::vector<long>{1, 2, 1, 2, 1});
  CHECK(!sseq.truncated);
}

TEST_CASE("iterates of the basic linear twist grow one degree per step") {
  auto Q = FieldSpec::rationals();
  JonqMap t = JonqMap::diagonal(MobiusK::identity(Q), RatFunc::from_poly(Poly::x(Q)));
  CremonaMap tc = jonq_to_cremona(t);
  CHECK(tc.degree() == 2);
  CHECK(tc.to_string() == "[X*Z : X*Y : Z^2]");
  for (unsigned n = 1; n <= 10; ++n) {
    CremonaMap tn = jonq_to_cremona(t.pow((long)n));
    CHECK(tn.degree() == (long)n + 1);
    if (n <= 6) CHECK(tn == tc.pow(n));
  }
  auto cls = classify_map_growth(tc, 24);
  CHECK(cls.type == GrowthType::jonquieres_twist);
  CHECK(cls.note == "slope 1");
}

TEST_CASE("a diagonal map has bounded degree sequence") {
  auto Q = FieldSpec::rationals();
  JonqMap d = JonqMap::diagonal(MobiusK::scaling(FieldElem::from_integer(Q, 2)),
                                RatFunc::constant(FieldElem::from_integer(Q, 3)));
  auto cls = classify_map_growth(jonq_to_cremona(d), 24);
  CHECK(cls.type == GrowthType::elliptic);
  CHECK(cls.note == "degree stays at 1");
}

TEST_CASE("degree doubling map is recognized as loxodromic") {
  PlaneVars v;
  CremonaMap h(v.Y * v.Z, v.Y * v.Y - v.X * v.Z, v.Z * v.Z);
  CHECK(h.compose(h).degree() == 4);
  auto seq = degree_sequence(h, 8);
  REQUIRE(seq.degrees.size() == 9);
  CHECK(!seq.truncated);
  for (unsigned n = 0; n < seq.degrees.size(); ++n) CHECK(seq.degrees[n] == (1L << n));
  auto cls = classify_map_growth(h, 8);
  CHECK(cls.type == GrowthType::loxodromic);
  CHECK(cls.note == "ratio 2");
}

TEST_CASE("degree budget turns into an explicit undetermined verdict") {
  PlaneVars v;
  CremonaMap h(v.Y * v.Z, v.Y * v.Y - v.X * v.Z, v.Z * v.Z);
  auto cls = classify_map_growth(h, 24);
  CHECK(cls.type == GrowthType::undetermined);
  CHECK(cls.note == "degree budget reached after 8 iterates");

  CremonaMap sq(v.X * v.X, v.Y * v.Y, v.Z * v.Z);
  auto mseq = degree_sequence(sq, 24);
  CHECK(mseq.truncated);
  CHECK(mseq.degrees.back() == 4096);
}

TEST_CASE("growth classification of synthetic degree sequences") {
  std::vector<long> quad;
  for (long n = 1; n <= 24; ++n) quad.push_back(3 * n * n + n + 2);
  auto cq = classify_growth(quad);
  CHECK(cq.type == GrowthType::halphen_twist);
  CHECK(cq.note == "second difference 6");

  CHECK(classify_growth(std::vector<long>{1, 2, 1, 2, 1, 2, 1, 2, 1}).type ==
        GrowthType::elliptic);
  CHECK(classify_growth(std::vector<long>{1, 2, 3, 4, 5, 6, 7, 8, 9}).type ==
        GrowthType::jonquieres_twist);
  CHECK(classify_growth(std::vector<long>{1, 2, 4, 8, 16, 32, 64, 128, 256}).type ==
        GrowthType::loxodromic);

  // linear growth with half-integer slope: differences alternate 1, 0
  auto half = classify_growth(std::vector<long>{1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7});
  CHECK(half.type == GrowthType::jonquieres_twist);
  CHECK(half.note == "first differences periodic, mean slope 1/2");

  CHECK_THROWS_AS(classify_growth(std::vector<long>{1, 2, 3}), calc_error);
}

TEST_CASE("composition degree budget raises an in-band error") {
  PlaneVars v;
  CremonaMap h(v.Y * v.Z, v.Y * v.Y - v.X * v.Z, v.Z * v.Z);
  CHECK_THROWS_AS(h.pow(5, 8), calc_error);
  try {
    h.pow(5, 8);
  } catch (const calc_error& e) {
    CHECK(e.code() == errc::degree_budget_exceeded);
  }
}

TEST_CASE("plane map conversion rejects non-fibered input dimensions") {
  auto Q = FieldSpec::rationals();
  // conversion of a fiber translation: (x, y + 1) is linear in the plane
  JonqMap tr = JonqMap::translation_y(MobiusK::identity(Q),
                                      RatFunc::constant(FieldElem::one(Q)));
  CHECK(jonq_to_cremona(tr).degree() == 1);
}
