#pragma once
#include "cremona/ratfunc.hpp"

namespace cremona {

// Power series known modulo x^(order+1). Arithmetic aligns to the weaker
// precision of the two operands.
class TruncSeries {
public:
  TruncSeries(FieldSpec s, unsigned long order)
      : spec_(s), c_((std::size_t)order + 1, FieldElem::zero(s)) {}
  static TruncSeries from_poly(const Poly& p, unsigned long order);
  // NonUnitConstantTerm when den(0) = 0; use laurent_from_ratfunc instead.
  static TruncSeries from_ratfunc(const RatFunc& f, unsigned long order);

  const FieldSpec& spec() const { return spec_; }
  unsigned long order() const { return (unsigned long)c_.size() - 1; }
  const FieldElem& coeff(std::size_t i) const; // i <= order
  void set_coeff(std::size_t i, const FieldElem& v);
  bool is_zero() const; // zero modulo the truncation

  bool operator==(const TruncSeries&) const = default;
  bool operator!=(const TruncSeries& o) const { return !(*this == o); }

  TruncSeries operator-() const;
  friend TruncSeries operator+(const TruncSeries&, const TruncSeries&);
  friend TruncSeries operator-(const TruncSeries&, const TruncSeries&);
  friend TruncSeries operator*(const TruncSeries&, const TruncSeries&);
  TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
  TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }
  friend TruncSeries operator*(const FieldElem& c, const TruncSeries& t);

  TruncSeries truncate(unsigned long new_order) const; // new_order <= order
  TruncSeries invert() const;                          // NonUnitConstantTerm on c0 = 0
  TruncSeries scale_arg(const FieldElem& a) const;     // t(a x)
  TruncSeries shift_up(unsigned long k) const;         // x^k t, precision grows by k

  unsigned long valuation() const; // first nonzero index; order+1 when zero

  std::string to_string(const std::string& var = "x") const;

private:
  FieldSpec spec_;
  std::vector<FieldElem> c_;
};

// x^val * unit with unit(0) != 0; val is exact, unit is truncated.
struct LaurentSeries {
  long val = 0;
  TruncSeries unit;

  const FieldSpec& spec() const { return unit.spec(); }
  // coefficient of x^k, for val <= k <= val + order
  FieldElem coeff(long k) const;
  LaurentSeries scale_arg(const FieldElem& a) const; // a != 0
  std::string to_string(const std::string& var = "x") const;
};

LaurentSeries laurent_mul(const LaurentSeries&, const LaurentSeries&);
LaurentSeries laurent_inverse(const LaurentSeries&);

// a / b as a Laurent series; ZeroElement when b vanishes to its full precision.
LaurentSeries laurent_div(const TruncSeries& a, const TruncSeries& b);

// Exact expansion of f at x = 0 with val = ord_0(f).
LaurentSeries laurent_from_ratfunc(const RatFunc& f, unsigned long order);

} // namespace cremona
