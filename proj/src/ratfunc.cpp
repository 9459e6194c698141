#include "cremona/ratfunc.hpp"

namespace cremona {

RatFunc::RatFunc(Poly num, Poly den) : num_(num.spec()), den_(den.spec()) {
  if (num.spec() != den.spec()) fail(errc::spec_mismatch, "ratfunc across fields");
  if (den.is_zero()) fail(errc::division_by_zero, "zero denominator");
  if (num.is_zero()) {
    num_ = std::move(num);
    den_ = Poly::constant(FieldElem::one(num_.spec()));
    return;
  }
  Poly g = gcd(num, den);
  num = num / g;
  den = den / g;
  FieldElem lc = den.lead().inverse();
  num_ = lc * num;
  den_ = lc * den;
}

RatFunc RatFunc::constant(const FieldElem& c) {
  RatFunc r(c.spec());
  r.num_ = Poly::constant(c);
  return r;
}

RatFunc RatFunc::x(const FieldSpec& s) { return from_poly(Poly::x(s)); }

RatFunc RatFunc::from_poly(Poly p) {
  RatFunc r(p.spec());
  r.num_ = std::move(p);
  return r;
}

std::optional<FieldElem> RatFunc::as_constant() const {
  if (!is_constant()) return std::nullopt;
  return num_.coeff(0); // den is monic constant, hence 1
}

std::optional<Poly> RatFunc::as_poly() const {
  if (den_.degree() != 0) return std::nullopt;
  return num_;
}

long RatFunc::val_at_zero() const {
  if (is_zero()) return 0;
  return (long)num_.valuation_at_zero() - (long)den_.valuation_at_zero();
}

long RatFunc::val_at_infinity() const { return den_.degree() - num_.degree(); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) fail(errc::division_by_zero, "inverse of the zero function");
  return RatFunc(den_, num_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc acc = one(spec()), base = *this;
  unsigned long k = (unsigned long)e;
  while (k) {
    if (k & 1) acc *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return acc;
}

std::optional<FieldElem> RatFunc::eval(const FieldElem& v) const {
  FieldElem d = den_.eval(v);
  if (d.is_zero()) return std::nullopt;
  return num_.eval(v) / d;
}

RatFunc RatFunc::substitute(const RatFunc& inner) const {
  if (spec() != inner.spec()) fail(errc::spec_mismatch, "substitute across fields");
  const Poly& P = inner.num_;
  const Poly& Q = inner.den_;
  long m = std::max(num_.degree(), den_.degree());
  if (m < 0) return *this; // zero function
  std::vector<Poly> ppow = {Poly::constant(FieldElem::one(spec()))};
  std::vector<Poly> qpow = ppow;
  for (long i = 1; i <= m; ++i) {
    ppow.push_back(ppow.back() * P);
    qpow.push_back(qpow.back() * Q);
  }
  Poly n2(spec()), d2(spec());
  for (long i = 0; i <= m; ++i) {
    Poly cross = ppow[(std::size_t)i] * qpow[(std::size_t)(m - i)];
    n2 += Poly::constant(num_.coeff((std::size_t)i)) * cross;
    d2 += Poly::constant(den_.coeff((std::size_t)i)) * cross;
  }
  if (d2.is_zero()) fail(errc::division_by_zero, "substitution lands in a pole");
  return RatFunc(n2, d2);
}

RatFunc RatFunc::derivative() const {
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::string RatFunc::to_string(const std::string& var) const {
  if (den_.degree() == 0) return num_.to_string(var);
  std::string n = num_.to_string(var);
  std::string d = den_.to_string(var);
  if (n.find(' ') != std::string::npos) n = "(" + n + ")";
  if (d.find(' ') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

SquareRoot ratfunc_square_root(const RatFunc& f) {
  SquareRoot out;
  const FieldSpec& s = f.spec();
  if (f.is_zero()) {
    out.verdict = Ternary::yes;
    out.root = RatFunc::zero(s);
    return out;
  }
  Poly half_num = Poly::constant(FieldElem::one(s));
  Poly half_den = half_num;
  for (auto& [part, mult] : squarefree_decomposition(f.num())) {
    if (mult % 2) {
      out.verdict = Ternary::no;
      return out;
    }
    half_num *= part.pow(mult / 2);
  }
  for (auto& [part, mult] : squarefree_decomposition(f.den())) {
    if (mult % 2) {
      out.verdict = Ternary::no;
      return out;
    }
    half_den *= part.pow(mult / 2);
  }
  FieldElem lc = f.num().lead(); // den is monic
  auto sq = nth_root_in_field(lc, 2);
  if (!sq) {
    out.verdict = s.kind() == FieldKind::cyclotomic ? Ternary::undecided : Ternary::no;
    return out;
  }
  out.verdict = Ternary::yes;
  out.root = RatFunc(Poly::constant(*sq) * half_num, half_den);
  return out;
}

} // namespace cremona
