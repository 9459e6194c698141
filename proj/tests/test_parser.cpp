#include "doctest.h"

#include "cremona/parser.hpp"

using namespace cremona;

namespace {

void check_round_trip(const std::string& text, const FieldSpec& s) {
  CAPTURE(text);
  ParsedMap m = parse_map(text, s);
  std::string r = render_map(m);
  ParsedMap m2 = parse_map(r, s);
  bool eq = std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        return std::holds_alternative<T>(m2) && std::get<T>(m2) == a;
      },
      m);
  CHECK(eq);
}

} // namespace

TEST_CASE("fibered maps parse with normalized rendering") {
  auto Q = FieldSpec::rationals();
  auto m = parse_map("(2*x, (x*y)/(1))", Q);
  REQUIRE(std::holds_alternative<JonqMap>(m));
  auto& j = std::get<JonqMap>(m);
  CHECK(j.base() == MobiusK::scaling(FieldElem::from_integer(Q, 2)));
  CHECK(render_map(m) == "(2*x, x*y)");
}

TEST_CASE("projective triples parse as plane maps") {
  auto Q = FieldSpec::rationals();
  auto m = parse_map("[Y*Z : X*Z : X*Y]", Q);
  REQUIRE(std::holds_alternative<CremonaMap>(m));
  CHECK(std::get<CremonaMap>(m).degree() == 2);
  CHECK(render_map(m) == "[Y*Z : X*Z : X*Y]");
}

TEST_CASE("a single fraction parses as a base-line map") {
  auto Q = FieldSpec::rationals();
  auto m = parse_map("((4*x+2)/(2))", Q);
  REQUIRE(std::holds_alternative<MobiusK>(m));
  CHECK(render_map(m) == "2*x + 1");
}

TEST_CASE("syntax errors carry byte offsets") {
  auto Q = FieldSpec::rationals();
  try {
    parse_map("(x, (y+x)/(x*y+1), z)", Q);
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.offset() == 17);
  }
}

TEST_CASE("parse and render round trips") {
  auto Q = FieldSpec::rationals();
  auto Q8 = FieldSpec::cyclotomic(8);
  auto F7 = FieldSpec::prime_field(7);

  for (const char* t : {"x", "(x + 1)/(x - 1)", "1/x", "x^-1", "-x + 1", "(x, -y)",
                        "(x, (y + 1)/(y - 1))", "(2*x, 3*y)", "(x/(x + 1), (x*y + 1)/(y - x))",
                        "(x, y + x^3)", "(x, (3/7)*y)", "[X^2 : Y^2 : Z^2]",
                        "[Y*Z : Y^2 - X*Z : Z^2]", "[X^2/2 : Y^2 : Z^2]"})
    check_round_trip(t, Q);

  check_round_trip("(zeta_8*x, y)", Q8);
  check_round_trip("(zeta_4*x, zeta_8^3*y)", Q8);
  check_round_trip("(3*x, y/x)", F7);
  check_round_trip("(x + 1, 5*y)", F7);
}

TEST_CASE("scalar and rational-function entry points") {
  auto Q = FieldSpec::rationals();
  auto F7 = FieldSpec::prime_field(7);
  CHECK(parse_scalar("3/7 + 1", Q).to_string() == "10/7");
  CHECK(parse_ratfunc("x^2/(x + 1)", Q).to_string() == "x^2/(x + 1)");
  CHECK(parse_scalar("10", F7) == FieldElem::from_integer(F7, 3));
  // the image of zeta_6 in F7 is the canonical generator 3
  CHECK(parse_scalar("zeta_6", F7) == FieldElem::from_integer(F7, 3));
}

TEST_CASE("unary minus binds below exponentiation") {
  auto Q = FieldSpec::rationals();
  RatFunc r = parse_ratfunc("-x^2", Q);
  CHECK(r.num().coeff(2) == FieldElem::from_integer(Q, -1));
}

TEST_CASE("malformed input raises syntax errors") {
  auto Q = FieldSpec::rationals();
  for (const char* t : {"2x", "(x, y", "[X : Y]", "(x, y/0)", "zeta_8*x", "(X, y)",
                        "[x : Y : Z]", "[X/Y : Y : Z]", "x ^ y"})
    CHECK_THROWS_AS(parse_map(t, Q), parse_error);
}

TEST_CASE("well-formed but out-of-group input raises domain errors") {
  auto Q = FieldSpec::rationals();
  auto expect_code = [&](const std::string& t, errc c) {
    CAPTURE(t);
    try {
      parse_map(t, Q);
      FAIL_CHECK("expected a domain error");
    } catch (const calc_error& e) {
      CHECK(e.code() == c);
    }
  };
  expect_code("(x^2, y)", errc::not_jonquieres);
  expect_code("(x, y^2)", errc::not_jonquieres);
  expect_code("(y, x*y)", errc::not_jonquieres);
  expect_code("[X : Y : Z^2]", errc::inconsistent_degrees);
  expect_code("[X + 1 : Y : Z]", errc::not_homogeneous);
}

TEST_CASE("expression trees expose the surface syntax") {
  MapExpr t = parse_expr_tree("(x, y + 1)");
  CHECK(t.kind == MapExpr::Kind::pair);
  REQUIRE(t.kids.size() == 2);
  CHECK(t.kids[1].kind == MapExpr::Kind::add);
}
