#include "cremona/jonq.hpp"

#include <sstream>

namespace cremona {

long PolyMat::max_degree() const {
  return std::max(std::max(a.degree(), b.degree()), std::max(c.degree(), d.degree()));
}

static Poly poly_lcm(const Poly& p, const Poly& q) {
  return (p / gcd(p, q)) * q;
}

JonqMap::JonqMap(MobiusK base, PolyMat mat) : base_(std::move(base)), mat_(std::move(mat)) {
  const FieldSpec& s = base_.spec();
  for (const Poly* e : {&mat_.a, &mat_.b, &mat_.c, &mat_.d})
    if (e->spec() != s) fail(errc::spec_mismatch, "fiber matrix over a different field");
  if (mat_.det().is_zero()) fail(errc::rank_zero_fiber, "fiber matrix has zero determinant");
  Poly content = gcd(gcd(mat_.a, mat_.b), gcd(mat_.c, mat_.d));
  if (content.degree() > 0) {
    mat_.a = mat_.a / content;
    mat_.b = mat_.b / content;
    mat_.c = mat_.c / content;
    mat_.d = mat_.d / content;
  }
  for (const Poly* e : {&mat_.a, &mat_.b, &mat_.c, &mat_.d}) {
    if (e->is_zero()) continue;
    FieldElem u = e->coeff(e->valuation_at_zero()).inverse();
    mat_.a = u * mat_.a;
    mat_.b = u * mat_.b;
    mat_.c = u * mat_.c;
    mat_.d = u * mat_.d;
    break;
  }
}

JonqMap JonqMap::identity(const FieldSpec& s) {
  return base_only(MobiusK::identity(s));
}

JonqMap JonqMap::base_only(MobiusK eta) {
  const FieldSpec& s = eta.spec();
  Poly one = Poly::constant(FieldElem::one(s));
  Poly zero = Poly::zero(s);
  return JonqMap(std::move(eta), PolyMat{one, zero, zero, one});
}

JonqMap JonqMap::fiberwise(PolyMat mat, const FieldSpec& s) {
  return JonqMap(MobiusK::identity(s), std::move(mat));
}

JonqMap JonqMap::from_fractions(MobiusK eta, const RatFunc& A, const RatFunc& B,
                                const RatFunc& C, const RatFunc& D) {
  const FieldSpec& s = eta.spec();
  Poly L = Poly::constant(FieldElem::one(s));
  for (const RatFunc* r : {&A, &B, &C, &D}) L = poly_lcm(L, r->den());
  RatFunc Lr = RatFunc::from_poly(L);
  auto clear = [&](const RatFunc& r) {
    auto p = (r * Lr).as_poly();
    if (!p) fail(errc::internal, "denominator clearing failed");
    return *p;
  };
  return JonqMap(std::move(eta), PolyMat{clear(A), clear(B), clear(C), clear(D)});
}

JonqMap JonqMap::diagonal(MobiusK eta, const RatFunc& r) {
  if (r.is_zero()) fail(errc::rank_zero_fiber, "diagonal fiber action by 0");
  const FieldSpec& s = eta.spec();
  return JonqMap(std::move(eta), PolyMat{r.num(), Poly::zero(s), Poly::zero(s), r.den()});
}

JonqMap JonqMap::translation_y(MobiusK eta, const RatFunc& r) {
  const FieldSpec& s = eta.spec();
  return JonqMap(std::move(eta), PolyMat{r.den(), r.num(), Poly::zero(s), r.den()});
}

std::array<RatFunc, 4> JonqMap::fraction_entries() const {
  return {RatFunc::from_poly(mat_.a), RatFunc::from_poly(mat_.b), RatFunc::from_poly(mat_.c),
          RatFunc::from_poly(mat_.d)};
}

bool JonqMap::is_identity() const {
  return base_.is_identity() && mat_.b.is_zero() && mat_.c.is_zero() && mat_.a == mat_.d;
}

bool JonqMap::operator==(const JonqMap& o) const {
  return base_ == o.base_ && mat_.a == o.mat_.a && mat_.b == o.mat_.b && mat_.c == o.mat_.c &&
         mat_.d == o.mat_.d;
}

JonqMap JonqMap::compose(const JonqMap& inner) const {
  RatFunc eta_inner = inner.base_.as_ratfunc();
  auto at_inner = [&](const Poly& p) { return RatFunc::from_poly(p).substitute(eta_inner); };
  RatFunc A = at_inner(mat_.a), B = at_inner(mat_.b), C = at_inner(mat_.c), D = at_inner(mat_.d);
  RatFunc ga = RatFunc::from_poly(inner.mat_.a), gb = RatFunc::from_poly(inner.mat_.b),
          gc = RatFunc::from_poly(inner.mat_.c), gd = RatFunc::from_poly(inner.mat_.d);
  return from_fractions(base_.compose(inner.base_), A * ga + B * gc, A * gb + B * gd,
                        C * ga + D * gc, C * gb + D * gd);
}

JonqMap JonqMap::inverse() const {
  MobiusK back = base_.inverse();
  RatFunc eta_inv = back.as_ratfunc();
  auto sub = [&](const Poly& p) { return RatFunc::from_poly(p).substitute(eta_inv); };
  return from_fractions(back, sub(mat_.d), -sub(mat_.b), -sub(mat_.c), sub(mat_.a));
}

JonqMap JonqMap::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  JonqMap acc = identity(spec());
  JonqMap base = *this;
  unsigned long k = (unsigned long)n;
  while (k) {
    if (k & 1) acc = acc.compose(base);
    k >>= 1;
    if (k) base = base.compose(base);
  }
  return acc;
}

std::optional<std::pair<P1Point, P1Point>> JonqMap::apply(const FieldElem& x0,
                                                          const P1Point& y) const {
  const FieldSpec& s = spec();
  P1Point bx = base_.apply(x0);
  FieldElem a0 = mat_.a.eval(x0), b0 = mat_.b.eval(x0), c0 = mat_.c.eval(x0),
            d0 = mat_.d.eval(x0);
  FieldElem det0 = a0 * d0 - b0 * c0;
  if (!det0.is_zero()) return std::pair{bx, MobiusK(a0, b0, c0, d0).apply(y)};
  // rank-1 fiber: everything off the kernel maps to one point
  FieldElem kv = b0, kw = -a0;
  if (kv.is_zero() && kw.is_zero()) {
    kv = d0;
    kw = -c0;
  }
  P1Point kernel = kw.is_zero() ? P1Point::infinity(s) : P1Point::at(kv / kw);
  if (y == kernel) return std::nullopt;
  FieldElem iv = y.inf ? a0 : a0 * y.v + b0;
  FieldElem iw = y.inf ? c0 : c0 * y.v + d0;
  P1Point img = iw.is_zero() ? P1Point::infinity(s) : P1Point::at(iv / iw);
  return std::pair{bx, img};
}

bool commutes(const JonqMap& f, const JonqMap& g) {
  return f.compose(g) == g.compose(f);
}

JonqMap conjugate(const JonqMap& f, const JonqMap& g) {
  return g.inverse().compose(f).compose(g);
}

RatFunc delta_of(const JonqMap& f) {
  Poly tr = f.mat().a + f.mat().d;
  return RatFunc(tr * tr, f.mat().det());
}

FiberReport fiber_events(const JonqMap& f) {
  FiberReport rep;
  const FieldSpec& s = f.spec();
  const PolyMat& M = f.mat();
  bool infinite = !projective_order(f.base()).has_value();
  rep.base_infinite_order = infinite;

  auto kernel_at = [&](const FieldElem& a0, const FieldElem& b0, const FieldElem& c0,
                       const FieldElem& d0) {
    FieldElem kv = b0, kw = -a0;
    if (kv.is_zero() && kw.is_zero()) {
      kv = d0;
      kw = -c0;
    }
    return kw.is_zero() ? P1Point::infinity(s) : P1Point::at(kv / kw);
  };

  Poly det = M.det();
  auto rl = roots_in_field(det);
  rep.unresolved = rl.unresolved;
  for (auto& [x0, mult] : rl.roots) {
    P1Point here = P1Point::at(x0);
    rep.events.push_back(
        FiberEvent{here, kernel_at(M.a.eval(x0), M.b.eval(x0), M.c.eval(x0), M.d.eval(x0)),
                   mult, infinite && f.base().apply(x0) != here});
  }

  long m = M.max_degree();
  long deficiency = 2 * m - det.degree();
  if (deficiency > 0) {
    auto top = [&](const Poly& p) { return p.coeff((std::size_t)m); };
    P1Point here = P1Point::infinity(s);
    rep.events.push_back(FiberEvent{here, kernel_at(top(M.a), top(M.b), top(M.c), top(M.d)),
                                    (unsigned long)deficiency,
                                    infinite && f.base().apply(here) != here});
  }
  return rep;
}

Report centralizer_persistence_report(const JonqMap& f) {
  Report rep;
  FiberReport fr = fiber_events(f);
  std::vector<const FiberEvent*> persistent;
  for (auto& ev : fr.events)
    if (ev.persistent) persistent.push_back(&ev);

  std::ostringstream pts;
  for (auto* ev : persistent) {
    if (pts.tellp() > 0) pts << ", ";
    pts << ev->base.to_string();
  }
  rep.witness.push_back({"persistent fibers", persistent.empty() ? "none" : pts.str()});
  rep.witness.push_back({"degenerate fibers", std::to_string(fr.events.size())});
  if (!fr.unresolved.empty())
    rep.witness.push_back({"unresolved det factors", std::to_string(fr.unresolved.size())});

  if (!fr.base_infinite_order) {
    rep.anchor = "persistence-finite-base";
    rep.statement = "base map has finite order: no fiber event is persistent and this "
                    "criterion does not constrain the centralizer";
    return rep;
  }
  if (persistent.empty()) {
    rep.anchor = "persistence-none";
    rep.statement = "no persistent degenerate fiber: the centralizer is not constrained "
                    "by fiber events";
    return rep;
  }

  bool parabolic = f.base().trace_sq_over_det() == FieldElem::from_integer(f.spec(), 4);
  rep.witness.push_back({"base type", parabolic ? "parabolic" : "multiplicative"});
  if (parabolic) {
    rep.anchor = "persistence-centralizer-z";
    rep.statement = "persistent degenerate fiber over a parabolic base: the centralizer "
                    "in the fibered group is infinite cyclic";
  } else {
    rep.anchor = "persistence-centralizer-z-torsion";
    rep.statement = "persistent degenerate fiber over a multiplicative base: the "
                    "centralizer in the fibered group is infinite cyclic up to a finite "
                    "cyclic factor of fiberwise scalings";
  }
  return rep;
}

std::string JonqMap::to_string() const {
  auto poly_factor = [](const Poly& p) {
    std::string s = p.to_string("x");
    if (s.find(' ') != std::string::npos || s.find('*') != std::string::npos ||
        s.find('/') != std::string::npos || (s.size() > 1 && s[0] == '-'))
      return "(" + s + ")";
    return s;
  };
  auto side = [&](const Poly& coef, const Poly& off) {
    if (coef.is_zero()) return off.to_string("x");
    std::string s;
    std::string cs = coef.to_string("x");
    s = cs == "1" ? "y" : poly_factor(coef) + "*y";
    if (!off.is_zero()) {
      std::string os = off.to_string("x");
      if (os[0] == '-')
        s += " - " + os.substr(1);
      else
        s += " + " + os;
    }
    return s;
  };
  std::string num = side(mat_.a, mat_.b);
  std::string den = side(mat_.c, mat_.d);
  std::string fiber;
  if (den == "1") {
    fiber = num;
  } else {
    // the denominator must bind as one factor; '/' groups to the left
    auto fenced = [](const std::string& s) {
      if (s.find(' ') != std::string::npos || s.find('*') != std::string::npos ||
          s.find('/') != std::string::npos || s[0] == '-')
        return "(" + s + ")";
      return s;
    };
    fiber = fenced(num) + "/" + fenced(den);
  }
  return "(" + base_.to_string("x") + ", " + fiber + ")";
}

} // namespace cremona
