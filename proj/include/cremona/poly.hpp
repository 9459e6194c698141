#pragma once
#include <utility>
#include <vector>

#include "cremona/field.hpp"

namespace cremona {

// Dense univariate polynomial over a FieldSpec. Trailing zero coefficients
// are always stripped; the zero polynomial has degree -1.
class Poly {
public:
  explicit Poly(FieldSpec spec) : spec_(spec) {}
  static Poly zero(const FieldSpec& s) { return Poly(s); }
  static Poly constant(const FieldElem& c);
  static Poly x(const FieldSpec& s);
  static Poly monomial(const FieldElem& c, unsigned long deg);
  static Poly from_coeffs(const FieldSpec& s, std::vector<FieldElem> coeffs);

  const FieldSpec& spec() const { return spec_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  FieldElem coeff(std::size_t i) const;
  const FieldElem& lead() const; // ZeroElement on the zero polynomial
  FieldElem constant_term() const { return coeff(0); }
  const std::vector<FieldElem>& coeffs() const { return c_; }

  bool operator==(const Poly&) const = default;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator-() const;
  friend Poly operator+(const Poly&, const Poly&);
  friend Poly operator-(const Poly&, const Poly&);
  friend Poly operator*(const Poly&, const Poly&);
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator*(const FieldElem& c, const Poly& p);

  Poly pow(unsigned long e) const;
  Poly monic() const; // ZeroElement on 0
  Poly derivative() const;

  FieldElem eval(const FieldElem& v) const;
  Poly compose(const Poly& inner) const;    // this(inner(x))
  Poly scale_arg(const FieldElem& a) const; // p(a x)

  // Largest k with x^k dividing p; 0 for the zero polynomial.
  unsigned long valuation_at_zero() const;
  Poly shifted_down(unsigned long k) const; // p / x^k, requires valuation >= k

  std::string to_string(const std::string& var = "x") const;

private:
  void trim();
  FieldSpec spec_;
  std::vector<FieldElem> c_;
};

// quotient and remainder; DivisionByZero on zero divisor
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b); // SpecMismatch if remainder nonzero
Poly operator%(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b); // monic, gcd(0,0) = 0

// f = prod factors[i].first ^ factors[i].second with squarefree pairwise
// coprime parts; multiplicities strictly increasing. Input must be nonzero.
// Works in characteristic p via p-th root extraction on the perfect field.
std::vector<std::pair<Poly, unsigned long>> squarefree_decomposition(const Poly& f);

// Roots of f inside the coefficient field, with multiplicities. Factors the
// solver cannot resolve exactly (no rational candidate, no split-form square
// root of the discriminant) are reported untouched in `unresolved`.
struct RootList {
  std::vector<std::pair<FieldElem, unsigned long>> roots;
  std::vector<Poly> unresolved;
};
RootList roots_in_field(const Poly& f);

// Display form for a coefficient: prime-field residues render as plain
// integers so that re-parsing over the same field round-trips.
std::string scalar_display(const FieldElem& c);

} // namespace cremona
