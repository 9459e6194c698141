#pragma once
#include <variant>

#include "cremona/cremona_map.hpp"

namespace cremona {

// Syntax tree for map expressions. `pos` is the byte offset of the node in
// the source text and travels into every diagnostic.
struct MapExpr {
  enum class Kind {
    integer,  // ival
    ident,    // name, e.g. zeta_8
    variable, // name is one of x y X Y Z
    neg,
    add,
    sub,
    mul,
    div,
    pow, // kids[0] ^ exponent
    pair,
    triple,
  };
  Kind kind;
  std::size_t pos = 0;
  mpz_class ival = 0;
  std::string name;
  long exponent = 0;
  std::vector<MapExpr> kids;
};

// Grammar:
//   map    := '(' expr ',' expr ')' | '[' expr ':' expr ':' expr ']' | expr
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | base ('^' ['-'] int)?
//   base   := int | ident | variable | '(' expr ')'
// Whitespace is insignificant; multiplication is always explicit.
MapExpr parse_expr_tree(const std::string& text);

using ParsedMap = std::variant<MobiusK, JonqMap, CremonaMap>;

// Affine pairs become JonqMaps, bracketed triples CremonaMaps, and a bare
// Mobius expression in x a MobiusK.
ParsedMap parse_map(const std::string& text, const FieldSpec& field);

// y-free rational expression in x
RatFunc parse_ratfunc(const std::string& text, const FieldSpec& field);
// variable-free expression
FieldElem parse_scalar(const std::string& text, const FieldSpec& field);

std::string render_map(const ParsedMap& m);

} // namespace cremona
