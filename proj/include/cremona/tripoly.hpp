#pragma once
#include <array>
#include <map>

#include "cremona/poly.hpp"

namespace cremona {

using Mono = std::array<unsigned, 3>; // exponents of X, Y, Z

// Sparse polynomial in X, Y, Z. The map keys are exponent triples; only
// nonzero coefficients are stored.
class TriPoly {
public:
  explicit TriPoly(FieldSpec s) : spec_(s) {}
  static TriPoly monomial(const FieldElem& c, Mono m);
  static TriPoly variable(const FieldSpec& s, int axis); // 0 = X, 1 = Y, 2 = Z

  const FieldSpec& spec() const { return spec_; }
  const std::map<Mono, FieldElem>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  long total_degree() const; // -1 for 0
  bool is_homogeneous() const;
  std::size_t term_count() const { return t_.size(); }

  void add_term(Mono m, const FieldElem& c); // accumulates

  // append a known-nonzero term in ascending key order
  void raw_insert(Mono m, FieldElem c) { t_.emplace_hint(t_.end(), m, std::move(c)); }

  bool operator==(const TriPoly&) const = default;
  bool operator!=(const TriPoly& o) const { return !(*this == o); }

  TriPoly operator-() const;
  friend TriPoly operator+(const TriPoly&, const TriPoly&);
  friend TriPoly operator-(const TriPoly&, const TriPoly&);
  friend TriPoly operator*(const TriPoly&, const TriPoly&);
  TriPoly& operator+=(const TriPoly& o) { return *this = *this + o; }
  TriPoly& operator-=(const TriPoly& o) { return *this = *this - o; }
  TriPoly& operator*=(const TriPoly& o) { return *this = *this * o; }
  friend TriPoly operator*(const FieldElem& c, const TriPoly& p);

  FieldElem eval(const FieldElem& X, const FieldElem& Y, const FieldElem& Z) const;

  // this(P, Q, R), evaluated by Horner passes so that composing a large
  // formula with small arguments stays near the size of the result
  TriPoly substitute(const TriPoly& P, const TriPoly& Q, const TriPoly& R) const;

  Mono monomial_content() const;      // entrywise min of exponents; requires nonzero
  TriPoly shifted_down(Mono m) const; // divide by X^m0 Y^m1 Z^m2

  std::string to_string() const;

private:
  FieldSpec spec_;
  std::map<Mono, FieldElem> t_;
};

// gcd of homogeneous polynomials, monomial part included; normalized with
// the first stored coefficient equal to 1
TriPoly tri_gcd(const std::vector<TriPoly>& ps);
TriPoly tri_divexact(const TriPoly& a, const TriPoly& b); // homogeneous, exact

} // namespace cremona
