#include "cremona/series.hpp"

#include <sstream>

namespace cremona {

TruncSeries TruncSeries::from_poly(const Poly& p, unsigned long order) {
  TruncSeries t(p.spec(), order);
  for (std::size_t i = 0; i <= order && (long)i <= p.degree(); ++i) t.c_[i] = p.coeff(i);
  return t;
}

TruncSeries TruncSeries::from_ratfunc(const RatFunc& f, unsigned long order) {
  if (f.den().coeff(0).is_zero())
    fail(errc::non_unit_constant_term, "ratfunc has a pole at 0");
  return from_poly(f.num(), order) * from_poly(f.den(), order).invert();
}

const FieldElem& TruncSeries::coeff(std::size_t i) const {
  if (i >= c_.size()) fail(errc::spec_mismatch, "coefficient beyond series precision");
  return c_[i];
}

void TruncSeries::set_coeff(std::size_t i, const FieldElem& v) {
  if (i >= c_.size()) fail(errc::spec_mismatch, "coefficient beyond series precision");
  c_[i] = v;
}

bool TruncSeries::is_zero() const {
  for (auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

unsigned long TruncSeries::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return i;
  return order() + 1;
}

static void require_same_spec(const TruncSeries& a, const TruncSeries& b) {
  if (a.spec() != b.spec()) fail(errc::spec_mismatch, "series across fields");
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  require_same_spec(a, b);
  TruncSeries r(a.spec_, std::min(a.order(), b.order()));
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  require_same_spec(a, b);
  TruncSeries r(a.spec_, std::min(a.order(), b.order()));
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < r.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

TruncSeries operator*(const FieldElem& c, const TruncSeries& t) {
  TruncSeries r = t;
  for (auto& q : r.c_) q *= c;
  return r;
}

TruncSeries TruncSeries::truncate(unsigned long new_order) const {
  if (new_order > order()) fail(errc::spec_mismatch, "cannot raise series precision");
  TruncSeries r(spec_, new_order);
  for (std::size_t i = 0; i <= new_order; ++i) r.c_[i] = c_[i];
  return r;
}

TruncSeries TruncSeries::invert() const {
  if (c_[0].is_zero()) fail(errc::non_unit_constant_term, "series has zero constant term");
  TruncSeries r(spec_, order());
  FieldElem u = c_[0].inverse();
  r.c_[0] = u;
  for (std::size_t k = 1; k < c_.size(); ++k) {
    FieldElem acc = FieldElem::zero(spec_);
    for (std::size_t i = 1; i <= k; ++i) acc += c_[i] * r.c_[k - i];
    r.c_[k] = -(u * acc);
  }
  return r;
}

TruncSeries TruncSeries::scale_arg(const FieldElem& a) const {
  TruncSeries r = *this;
  FieldElem f = FieldElem::one(spec_);
  for (std::size_t i = 1; i < r.c_.size(); ++i) {
    f *= a;
    r.c_[i] *= f;
  }
  return r;
}

TruncSeries TruncSeries::shift_up(unsigned long k) const {
  TruncSeries r(spec_, order() + k);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
  return r;
}

std::string TruncSeries::to_string(const std::string& var) const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    std::string d = scalar_display(c_[i]);
    if (d.find(' ') != std::string::npos) d = "(" + d + ")";
    if (i == 0) {
      out << d;
    } else {
      if (d != "1") out << d << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  if (first) out << "0";
  out << " + O(" << var << "^" << c_.size() << ")";
  return out.str();
}

FieldElem LaurentSeries::coeff(long k) const {
  if (k < val) return FieldElem::zero(unit.spec());
  std::size_t i = (std::size_t)(k - val);
  if (i > unit.order()) fail(errc::spec_mismatch, "coefficient beyond series precision");
  return unit.coeff(i);
}

LaurentSeries LaurentSeries::scale_arg(const FieldElem& a) const {
  if (a.is_zero()) fail(errc::zero_element, "scaling a Laurent series argument by 0");
  LaurentSeries r{val, unit.scale_arg(a)};
  r.unit = a.pow(val) * r.unit;
  return r;
}

std::string LaurentSeries::to_string(const std::string& var) const {
  if (val == 0) return unit.to_string(var);
  std::ostringstream out;
  out << var << "^(" << val << ") * (" << unit.to_string(var) << ")";
  return out.str();
}

LaurentSeries laurent_mul(const LaurentSeries& a, const LaurentSeries& b) {
  return LaurentSeries{a.val + b.val, a.unit * b.unit};
}

LaurentSeries laurent_inverse(const LaurentSeries& a) {
  return LaurentSeries{-a.val, a.unit.invert()};
}

namespace {

// strip x^valuation, losing that much precision
std::pair<long, TruncSeries> strip_val(const TruncSeries& t) {
  unsigned long v = t.valuation();
  if (v > t.order()) fail(errc::zero_element, "series vanishes to full precision");
  TruncSeries u(t.spec(), t.order() - v);
  for (std::size_t i = 0; i + v <= t.order(); ++i) u.set_coeff(i, t.coeff(i + v));
  return {(long)v, u};
}

} // namespace

LaurentSeries laurent_div(const TruncSeries& a, const TruncSeries& b) {
  auto [vb, ub] = strip_val(b);
  if (a.is_zero()) return LaurentSeries{0, TruncSeries(a.spec(), a.order())};
  auto [va, ua] = strip_val(a);
  unsigned long n = std::min(ua.order(), ub.order());
  return LaurentSeries{va - vb, ua.truncate(n) * ub.truncate(n).invert()};
}

LaurentSeries laurent_from_ratfunc(const RatFunc& f, unsigned long order) {
  if (f.is_zero()) return LaurentSeries{0, TruncSeries(f.spec(), order)};
  unsigned long vn = f.num().valuation_at_zero();
  unsigned long vd = f.den().valuation_at_zero();
  Poly n = f.num().shifted_down(vn);
  Poly d = f.den().shifted_down(vd);
  TruncSeries unit =
      TruncSeries::from_poly(n, order) * TruncSeries::from_poly(d, order).invert();
  return LaurentSeries{(long)vn - (long)vd, unit};
}

} // namespace cremona
