#pragma once
#include "cremona/poly.hpp"

namespace cremona {

// Element of K(x), kept reduced: gcd(num, den) = 1 and den monic.
class RatFunc {
public:
  explicit RatFunc(FieldSpec s) : num_(s), den_(Poly::constant(FieldElem::one(s))) {}
  RatFunc(Poly num, Poly den); // reduces; DivisionByZero on zero denominator

  static RatFunc zero(const FieldSpec& s) { return RatFunc(s); }
  static RatFunc one(const FieldSpec& s) { return constant(FieldElem::one(s)); }
  static RatFunc constant(const FieldElem& c);
  static RatFunc x(const FieldSpec& s);
  static RatFunc from_poly(Poly p);

  const FieldSpec& spec() const { return num_.spec(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  std::optional<FieldElem> as_constant() const;
  std::optional<Poly> as_poly() const; // when den = 1

  // degree as a self-map of the projective line
  long map_degree() const { return std::max(num_.degree(), den_.degree()); }
  long val_at_zero() const;     // order of vanishing at x = 0 (negative at a pole)
  long val_at_infinity() const; // deg den - deg num

  bool operator==(const RatFunc&) const = default;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc operator-() const;
  RatFunc inverse() const; // DivisionByZero on 0
  friend RatFunc operator+(const RatFunc&, const RatFunc&);
  friend RatFunc operator-(const RatFunc&, const RatFunc&);
  friend RatFunc operator*(const RatFunc&, const RatFunc&);
  friend RatFunc operator/(const RatFunc&, const RatFunc&);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc pow(long e) const;

  std::optional<FieldElem> eval(const FieldElem& v) const; // nullopt at a pole
  RatFunc substitute(const RatFunc& inner) const;          // this(inner(x))
  RatFunc derivative() const;

  std::string to_string(const std::string& var = "x") const;

private:
  Poly num_, den_;
};

enum class Ternary { yes, no, undecided };

// Is f a square in K(x)? Multiplicity parity is decided exactly; only the
// leading-constant part can come back undecided (square roots over Q(zeta_n)
// are searched in split form rational * root-of-unity).
struct SquareRoot {
  Ternary verdict = Ternary::no;
  std::optional<RatFunc> root;
};
SquareRoot ratfunc_square_root(const RatFunc& f);

} // namespace cremona
