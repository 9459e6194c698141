#include "cremona/mobius.hpp"

namespace cremona {

MobiusK::MobiusK(FieldElem a, FieldElem b, FieldElem c, FieldElem d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_.spec() != b_.spec() || a_.spec() != c_.spec() || a_.spec() != d_.spec())
    fail(errc::spec_mismatch, "mobius entries across fields");
  if (det().is_zero()) fail(errc::zero_element, "mobius map with zero determinant");
  for (FieldElem* e : {&a_, &b_, &c_, &d_}) {
    if (e->is_zero()) continue;
    FieldElem u = e->inverse();
    a_ *= u;
    b_ *= u;
    c_ *= u;
    d_ *= u;
    break;
  }
}

MobiusK MobiusK::identity(const FieldSpec& s) {
  return MobiusK(FieldElem::one(s), FieldElem::zero(s), FieldElem::zero(s), FieldElem::one(s));
}

MobiusK MobiusK::scaling(const FieldElem& alpha) {
  const FieldSpec& s = alpha.spec();
  return MobiusK(alpha, FieldElem::zero(s), FieldElem::zero(s), FieldElem::one(s));
}

MobiusK MobiusK::translation(const FieldElem& t) {
  const FieldSpec& s = t.spec();
  return MobiusK(FieldElem::one(s), t, FieldElem::zero(s), FieldElem::one(s));
}

MobiusK MobiusK::inversion(const FieldSpec& s) {
  return MobiusK(FieldElem::zero(s), FieldElem::one(s), FieldElem::one(s), FieldElem::zero(s));
}

FieldElem MobiusK::trace_sq_over_det() const {
  FieldElem tr = a_ + d_;
  return tr * tr / det();
}

bool MobiusK::is_identity() const {
  return b_.is_zero() && c_.is_zero() && a_ == d_;
}

MobiusK MobiusK::compose(const MobiusK& inner) const {
  return MobiusK(a_ * inner.a_ + b_ * inner.c_, a_ * inner.b_ + b_ * inner.d_,
                 c_ * inner.a_ + d_ * inner.c_, c_ * inner.b_ + d_ * inner.d_);
}

MobiusK MobiusK::inverse() const { return MobiusK(d_, -b_, -c_, a_); }

MobiusK MobiusK::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  MobiusK acc = identity(spec());
  MobiusK base = *this;
  unsigned long k = (unsigned long)n;
  while (k) {
    if (k & 1) acc = acc.compose(base);
    k >>= 1;
    if (k) base = base.compose(base);
  }
  return acc;
}

P1Point MobiusK::apply(const P1Point& p) const {
  const FieldSpec& s = spec();
  if (p.inf) {
    if (c_.is_zero()) return P1Point::infinity(s);
    return P1Point::at(a_ / c_);
  }
  FieldElem den = c_ * p.v + d_;
  if (den.is_zero()) return P1Point::infinity(s);
  return P1Point::at((a_ * p.v + b_) / den);
}

RatFunc MobiusK::as_ratfunc() const {
  const FieldSpec& s = spec();
  Poly num = Poly::constant(a_) * Poly::x(s) + Poly::constant(b_);
  Poly den = Poly::constant(c_) * Poly::x(s) + Poly::constant(d_);
  return RatFunc(num, den);
}

std::string MobiusK::to_string(const std::string& var) const {
  return as_ratfunc().to_string(var);
}

std::optional<unsigned long> projective_order(const MobiusK& m) {
  if (m.is_identity()) return 1;
  const FieldSpec& s = m.spec();
  FieldElem tr = m.a() + m.d();
  FieldElem disc = tr * tr - FieldElem::from_integer(s, 4) * m.det();

  if (s.characteristic() == 0) {
    if (disc.is_zero()) return std::nullopt; // nonscalar parabolic
    if (s.kind() == FieldKind::rationals) {
      mpq_class t = *m.trace_sq_over_det().as_rational();
      if (t == 0) return 2;
      if (t == 1) return 3;
      if (t == 2) return 4;
      if (t == 3) return 6;
      return std::nullopt;
    }
    unsigned long phi = s.extension_degree();
    unsigned long bound = std::max<unsigned long>(24, 8 * phi * phi);
    MobiusK cur = m;
    for (unsigned long k = 2; k <= bound; ++k) {
      cur = cur.compose(m);
      if (cur.is_identity()) return k;
    }
    return std::nullopt;
  }

  unsigned long p = s.p();
  if (p == 2) {
    MobiusK cur = m;
    for (unsigned long k = 2; k <= 6; ++k) {
      cur = cur.compose(m);
      if (cur.is_identity()) return k;
    }
    fail(errc::internal, "order search in PGL_2(F_2) fell through");
  }
  if (disc.is_zero()) return p;
  if (auto sq = nth_root_in_field(disc, 2)) {
    FieldElem two_inv = FieldElem::from_integer(s, 2).inverse();
    FieldElem l1 = (tr + *sq) * two_inv;
    FieldElem l2 = (tr - *sq) * two_inv;
    return multiplicative_order(l1 / l2);
  }
  for (unsigned long d : divisors_of(p + 1)) {
    if (d > 1 && m.pow((long)d).is_identity()) return d;
  }
  fail(errc::internal, "order search in PGL_2(F_p) fell through");
}

FixedPoints fixed_points(const MobiusK& m) {
  FixedPoints out;
  const FieldSpec& s = m.spec();
  if (m.is_identity()) {
    out.whole_line = true;
    return out;
  }
  if (m.c().is_zero()) out.pts.push_back(P1Point::infinity(s));
  Poly X = Poly::x(s);
  Poly fix = Poly::constant(m.c()) * X * X + Poly::constant(m.d() - m.a()) * X -
             Poly::constant(m.b());
  if (fix.is_zero()) fail(errc::internal, "fixed point equation degenerated");
  if (fix.is_constant()) return out; // translation: infinity only
  auto rl = roots_in_field(fix);
  for (auto& [r, mult] : rl.roots) {
    (void)mult;
    out.pts.push_back(P1Point::at(r));
  }
  out.resolved = rl.unresolved.empty();
  return out;
}

BaseOrderReport base_order_report(const MobiusK& m) {
  BaseOrderReport rep;
  if (auto ord = projective_order(m)) {
    rep.kind = BaseOrderReport::Kind::finite_order;
    rep.order = ord;
    return rep;
  }
  const FieldSpec& s = m.spec();
  FixedPoints fx = fixed_points(m);
  if (!fx.resolved) {
    rep.kind = BaseOrderReport::Kind::unresolved_fixed_points;
    return rep;
  }

  auto to_zero_inf = [&](const P1Point& p, const P1Point& q) {
    // psi with psi(0) = p, psi(inf) = q
    FieldElem one = FieldElem::one(s), zero = FieldElem::zero(s);
    if (p.inf) return MobiusK(q.v, one, one, zero);
    if (q.inf) return MobiusK(one, p.v, zero, one);
    return MobiusK(q.v, p.v, one, one);
  };

  if (fx.pts.size() == 2) {
    // keep infinity where it is, so an already-diagonal base gets psi = x
    if (fx.pts[0].inf) std::swap(fx.pts[0], fx.pts[1]);
    MobiusK psi = to_zero_inf(fx.pts[0], fx.pts[1]);
    MobiusK conj = psi.inverse().compose(m).compose(psi);
    if (!conj.b().is_zero() || !conj.c().is_zero())
      fail(errc::internal, "diagonalized base map is not diagonal");
    rep.kind = BaseOrderReport::Kind::infinite_multiplicative;
    rep.multiplier = conj.a() / conj.d();
    rep.coordinate = psi;
    return rep;
  }
  if (fx.pts.size() != 1) fail(errc::internal, "infinite order with no fixed point data");

  // parabolic: send the double fixed point to infinity, then rescale
  MobiusK psi1 = fx.pts[0].inf
                     ? MobiusK::identity(s)
                     : MobiusK(fx.pts[0].v, FieldElem::one(s), FieldElem::one(s),
                               FieldElem::zero(s));
  MobiusK c1 = psi1.inverse().compose(m).compose(psi1);
  if (!c1.c().is_zero() || c1.a() != c1.d())
    fail(errc::internal, "parabolic base map did not reduce to a translation");
  FieldElem t = c1.b() / c1.d();
  MobiusK psi = psi1.compose(MobiusK::scaling(t));
  rep.kind = BaseOrderReport::Kind::infinite_parabolic;
  rep.coordinate = psi;
  return rep;
}

} // namespace cremona
