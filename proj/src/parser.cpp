#include "cremona/parser.hpp"

namespace cremona {

namespace {

struct Token {
  enum class T { integer, ident, sym, end };
  T t;
  std::size_t pos;
  mpz_class ival;
  std::string text;
  char sym = 0;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (c >= '0' && c <= '9') {
      std::size_t j = i;
      while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
      Token t{Token::T::integer, i, mpz_class(s.substr(i, j - i)), "", 0};
      out.push_back(std::move(t));
      i = j;
      continue;
    }
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
      std::size_t j = i;
      while (j < s.size() && ((s[j] >= 'a' && s[j] <= 'z') || (s[j] >= 'A' && s[j] <= 'Z') ||
                              (s[j] >= '0' && s[j] <= '9') || s[j] == '_'))
        ++j;
      out.push_back(Token{Token::T::ident, i, 0, s.substr(i, j - i), 0});
      i = j;
      continue;
    }
    if (std::string("+-*/^(),[]:").find(c) != std::string::npos) {
      out.push_back(Token{Token::T::sym, i, 0, "", c});
      ++i;
      continue;
    }
    throw parse_error(i, std::string("unexpected character '") + c + "'");
  }
  out.push_back(Token{Token::T::end, s.size(), 0, "", 0});
  return out;
}

class TreeParser {
public:
  explicit TreeParser(const std::string& text) : toks_(tokenize(text)) {}

  MapExpr parse_top() {
    if (is_sym('[')) {
      MapExpr node{MapExpr::Kind::triple, cur().pos, 0, "", 0, {}};
      expect('[');
      node.kids.push_back(parse_expr());
      expect(':');
      node.kids.push_back(parse_expr());
      expect(':');
      node.kids.push_back(parse_expr());
      expect(']');
      expect_end();
      return node;
    }
    if (is_sym('(')) {
      // '(' opens either a pair or a parenthesized expression; try the pair
      // shape first and rewind if no comma follows
      std::size_t save = idx_;
      expect('(');
      MapExpr first = parse_expr();
      if (is_sym(',')) {
        MapExpr node{MapExpr::Kind::pair, toks_[save].pos, 0, "", 0, {}};
        expect(',');
        node.kids.push_back(std::move(first));
        node.kids.push_back(parse_expr());
        expect(')');
        expect_end();
        return node;
      }
      idx_ = save;
    }
    MapExpr e = parse_expr();
    expect_end();
    return e;
  }

  MapExpr parse_expr() {
    MapExpr left = parse_term();
    while (is_sym('+') || is_sym('-')) {
      bool plus = cur().sym == '+';
      std::size_t p = cur().pos;
      ++idx_;
      MapExpr node{plus ? MapExpr::Kind::add : MapExpr::Kind::sub, p, 0, "", 0, {}};
      node.kids.push_back(std::move(left));
      node.kids.push_back(parse_term());
      left = std::move(node);
    }
    return left;
  }

private:
  const Token& cur() const { return toks_[idx_]; }
  bool is_sym(char c) const { return cur().t == Token::T::sym && cur().sym == c; }

  void expect(char c) {
    if (!is_sym(c)) throw parse_error(cur().pos, std::string("expected '") + c + "'");
    ++idx_;
  }
  void expect_end() {
    if (cur().t != Token::T::end) throw parse_error(cur().pos, "trailing input");
  }

  MapExpr parse_term() {
    MapExpr left = parse_factor();
    while (is_sym('*') || is_sym('/')) {
      bool mul = cur().sym == '*';
      std::size_t p = cur().pos;
      ++idx_;
      MapExpr node{mul ? MapExpr::Kind::mul : MapExpr::Kind::div, p, 0, "", 0, {}};
      node.kids.push_back(std::move(left));
      node.kids.push_back(parse_factor());
      left = std::move(node);
    }
    return left;
  }

  MapExpr parse_factor() {
    if (is_sym('-')) {
      MapExpr node{MapExpr::Kind::neg, cur().pos, 0, "", 0, {}};
      ++idx_;
      node.kids.push_back(parse_factor());
      return node;
    }
    MapExpr b = parse_base();
    if (is_sym('^')) {
      MapExpr node{MapExpr::Kind::pow, cur().pos, 0, "", 0, {}};
      ++idx_;
      bool negexp = false;
      if (is_sym('-')) {
        negexp = true;
        ++idx_;
      }
      if (cur().t != Token::T::integer) throw parse_error(cur().pos, "expected integer exponent");
      if (cur().ival > 4096) throw parse_error(cur().pos, "exponent too large");
      node.exponent = (negexp ? -1 : 1) * cur().ival.get_si();
      ++idx_;
      node.kids.push_back(std::move(b));
      return node;
    }
    return b;
  }

  MapExpr parse_base() {
    const Token& t = cur();
    if (t.t == Token::T::integer) {
      MapExpr node{MapExpr::Kind::integer, t.pos, t.ival, "", 0, {}};
      ++idx_;
      return node;
    }
    if (t.t == Token::T::ident) {
      bool var = t.text == "x" || t.text == "y" || t.text == "X" || t.text == "Y" ||
                 t.text == "Z";
      MapExpr node{var ? MapExpr::Kind::variable : MapExpr::Kind::ident, t.pos, 0, t.text, 0, {}};
      ++idx_;
      return node;
    }
    if (is_sym('(')) {
      ++idx_;
      MapExpr e = parse_expr();
      expect(')');
      return e;
    }
    throw parse_error(t.pos, "expected a value");
  }

  std::vector<Token> toks_;
  std::size_t idx_ = 0;
};

// ---- evaluation ----

// polynomial in y with coefficients in K[x], index = power of y
using YPoly = std::vector<Poly>;

void yp_trim(YPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

YPoly yp_from(Poly p) {
  YPoly r;
  if (!p.is_zero()) r.push_back(std::move(p));
  return r;
}

YPoly yp_add(const YPoly& a, const YPoly& b, const FieldSpec& s) {
  YPoly r(std::max(a.size(), b.size()), Poly(s));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  yp_trim(r);
  return r;
}

YPoly yp_neg(YPoly a) {
  for (auto& p : a) p = -p;
  return a;
}

YPoly yp_mul(const YPoly& a, const YPoly& b, const FieldSpec& s) {
  if (a.empty() || b.empty()) return {};
  YPoly r(a.size() + b.size() - 1, Poly(s));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  yp_trim(r);
  return r;
}

// unreduced fraction of y-polynomials; degree checks are made on this raw
// shape, reduction happens only after the Jonquieres form is recognized
struct BiRat {
  YPoly num, den;
};

BiRat br_scalar(const FieldElem& c, const FieldSpec& s) {
  return {yp_from(Poly::constant(c)), yp_from(Poly::constant(FieldElem::one(s)))};
}

BiRat br_mul(const BiRat& a, const BiRat& b, const FieldSpec& s) {
  return {yp_mul(a.num, b.num, s), yp_mul(a.den, b.den, s)};
}

BiRat br_add(const BiRat& a, const BiRat& b, const FieldSpec& s) {
  return {yp_add(yp_mul(a.num, b.den, s), yp_mul(b.num, a.den, s), s),
          yp_mul(a.den, b.den, s)};
}

BiRat br_div(const BiRat& a, const BiRat& b, const FieldSpec& s, std::size_t pos) {
  if (b.num.empty()) throw parse_error(pos, "division by zero");
  return {yp_mul(a.num, b.den, s), yp_mul(a.den, b.num, s)};
}

FieldElem eval_const(const MapExpr& e, const FieldSpec& s);

BiRat eval_affine(const MapExpr& e, const FieldSpec& s) {
  switch (e.kind) {
    case MapExpr::Kind::integer:
      return br_scalar(FieldElem::from_integer(s, e.ival), s);
    case MapExpr::Kind::ident:
      return br_scalar(eval_const(e, s), s);
    case MapExpr::Kind::variable: {
      if (e.name == "x") return {yp_from(Poly::x(s)), yp_from(Poly::constant(FieldElem::one(s)))};
      if (e.name == "y") {
        YPoly n(2, Poly(s));
        n[1] = Poly::constant(FieldElem::one(s));
        return {n, yp_from(Poly::constant(FieldElem::one(s)))};
      }
      throw parse_error(e.pos, "projective variable in an affine expression");
    }
    case MapExpr::Kind::neg: {
      BiRat v = eval_affine(e.kids[0], s);
      return {yp_neg(v.num), v.den};
    }
    case MapExpr::Kind::add:
      return br_add(eval_affine(e.kids[0], s), eval_affine(e.kids[1], s), s);
    case MapExpr::Kind::sub: {
      BiRat b = eval_affine(e.kids[1], s);
      return br_add(eval_affine(e.kids[0], s), BiRat{yp_neg(b.num), b.den}, s);
    }
    case MapExpr::Kind::mul:
      return br_mul(eval_affine(e.kids[0], s), eval_affine(e.kids[1], s), s);
    case MapExpr::Kind::div:
      return br_div(eval_affine(e.kids[0], s), eval_affine(e.kids[1], s), s, e.pos);
    case MapExpr::Kind::pow: {
      BiRat v = eval_affine(e.kids[0], s);
      long n = e.exponent;
      if (n < 0) {
        if (v.num.empty()) throw parse_error(e.pos, "zero to a negative power");
        std::swap(v.num, v.den);
        n = -n;
      }
      BiRat acc = br_scalar(FieldElem::one(s), s);
      for (long i = 0; i < n; ++i) acc = br_mul(acc, v, s);
      return acc;
    }
    default:
      throw parse_error(e.pos, "nested map constructor");
  }
}

TriPoly eval_proj(const MapExpr& e, const FieldSpec& s) {
  switch (e.kind) {
    case MapExpr::Kind::integer:
      return TriPoly::monomial(FieldElem::from_integer(s, e.ival), {0, 0, 0});
    case MapExpr::Kind::ident:
      return TriPoly::monomial(eval_const(e, s), {0, 0, 0});
    case MapExpr::Kind::variable: {
      if (e.name == "X") return TriPoly::variable(s, 0);
      if (e.name == "Y") return TriPoly::variable(s, 1);
      if (e.name == "Z") return TriPoly::variable(s, 2);
      throw parse_error(e.pos, "affine variable in a projective component");
    }
    case MapExpr::Kind::neg:
      return -eval_proj(e.kids[0], s);
    case MapExpr::Kind::add:
      return eval_proj(e.kids[0], s) + eval_proj(e.kids[1], s);
    case MapExpr::Kind::sub:
      return eval_proj(e.kids[0], s) - eval_proj(e.kids[1], s);
    case MapExpr::Kind::mul:
      return eval_proj(e.kids[0], s) * eval_proj(e.kids[1], s);
    case MapExpr::Kind::div: {
      TriPoly a = eval_proj(e.kids[0], s);
      TriPoly b = eval_proj(e.kids[1], s);
      if (b.is_zero()) throw parse_error(e.pos, "division by zero");
      if (b.total_degree() != 0)
        throw parse_error(e.pos, "division in a projective component must be by a constant");
      return b.terms().begin()->second.inverse() * a;
    }
    case MapExpr::Kind::pow: {
      if (e.exponent < 0)
        throw parse_error(e.pos, "negative exponent in a projective component");
      TriPoly v = eval_proj(e.kids[0], s);
      TriPoly acc = TriPoly::monomial(FieldElem::one(s), {0, 0, 0});
      for (long i = 0; i < e.exponent; ++i) acc = acc * v;
      return acc;
    }
    default:
      throw parse_error(e.pos, "nested map constructor");
  }
}

FieldElem eval_const(const MapExpr& e, const FieldSpec& s) {
  if (e.name.rfind("zeta_", 0) == 0) {
    const std::string tail = e.name.substr(5);
    if (!tail.empty() && tail.find_first_not_of("0123456789") == std::string::npos) {
      unsigned long k = std::stoul(tail);
      if (k == 0) throw parse_error(e.pos, "zeta_0 is not a root of unity");
      try {
        return FieldElem::root_of_unity(s, k);
      } catch (const calc_error&) {
        throw parse_error(e.pos, e.name + " does not lie in " + s.to_string());
      }
    }
  }
  throw parse_error(e.pos, "unknown name '" + e.name + "'");
}

// y-free part of a linear y-fraction, as a plain polynomial in x
Poly ycoeff(const YPoly& p, std::size_t i, const FieldSpec& s) {
  return i < p.size() ? p[i] : Poly(s);
}

MobiusK mobius_from(const BiRat& v, const FieldSpec& s) {
  if (v.num.size() > 1 || v.den.size() > 1)
    fail(errc::not_jonquieres, "base coordinate depends on y");
  Poly n = ycoeff(v.num, 0, s), d = ycoeff(v.den, 0, s);
  if (n.degree() > 1 || d.degree() > 1)
    fail(errc::not_jonquieres, "base coordinate is not a Mobius map in x");
  return MobiusK(n.coeff(1), n.coeff(0), d.coeff(1), d.coeff(0));
}

JonqMap jonq_from(const BiRat& first, const BiRat& second, const FieldSpec& s) {
  MobiusK eta = mobius_from(first, s);
  if (second.num.size() > 2 || second.den.size() > 2)
    fail(errc::not_jonquieres, "fiber coordinate is not a Mobius map in y");
  RatFunc A = RatFunc::from_poly(ycoeff(second.num, 1, s));
  RatFunc B = RatFunc::from_poly(ycoeff(second.num, 0, s));
  RatFunc C = RatFunc::from_poly(ycoeff(second.den, 1, s));
  RatFunc D = RatFunc::from_poly(ycoeff(second.den, 0, s));
  return JonqMap::from_fractions(std::move(eta), A, B, C, D);
}

} // namespace

MapExpr parse_expr_tree(const std::string& text) { return TreeParser(text).parse_top(); }

ParsedMap parse_map(const std::string& text, const FieldSpec& field) {
  MapExpr tree = parse_expr_tree(text);
  if (tree.kind == MapExpr::Kind::pair) {
    BiRat first = eval_affine(tree.kids[0], field);
    BiRat second = eval_affine(tree.kids[1], field);
    return jonq_from(first, second, field);
  }
  if (tree.kind == MapExpr::Kind::triple) {
    TriPoly a = eval_proj(tree.kids[0], field);
    TriPoly b = eval_proj(tree.kids[1], field);
    TriPoly c = eval_proj(tree.kids[2], field);
    return CremonaMap(std::move(a), std::move(b), std::move(c));
  }
  return mobius_from(eval_affine(tree, field), field);
}

RatFunc parse_ratfunc(const std::string& text, const FieldSpec& field) {
  MapExpr tree = parse_expr_tree(text);
  if (tree.kind == MapExpr::Kind::pair || tree.kind == MapExpr::Kind::triple)
    throw parse_error(tree.pos, "expected a plain expression");
  BiRat v = eval_affine(tree, field);
  if (v.num.size() > 1 || v.den.size() > 1)
    throw parse_error(tree.pos, "expression depends on y");
  return RatFunc(ycoeff(v.num, 0, field), ycoeff(v.den, 0, field));
}

FieldElem parse_scalar(const std::string& text, const FieldSpec& field) {
  RatFunc r = parse_ratfunc(text, field);
  auto c = r.as_constant();
  if (!c) throw parse_error(0, "expected a constant");
  return *c;
}

std::string render_map(const ParsedMap& m) {
  return std::visit([](const auto& v) { return v.to_string(); }, m);
}

} // namespace cremona
