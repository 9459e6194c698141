#include "cremona/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cremona {

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const FieldElem& c) {
  Poly p(c.spec());
  if (!c.is_zero()) p.c_.push_back(c);
  return p;
}

Poly Poly::x(const FieldSpec& s) {
  Poly p(s);
  p.c_ = {FieldElem::zero(s), FieldElem::one(s)};
  return p;
}

Poly Poly::monomial(const FieldElem& c, unsigned long deg) {
  Poly p(c.spec());
  if (c.is_zero()) return p;
  p.c_.assign(deg + 1, FieldElem::zero(c.spec()));
  p.c_.back() = c;
  return p;
}

Poly Poly::from_coeffs(const FieldSpec& s, std::vector<FieldElem> coeffs) {
  Poly p(s);
  for (auto& c : coeffs)
    if (c.spec() != s) fail(errc::spec_mismatch, "coefficient from wrong field");
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

FieldElem Poly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : FieldElem::zero(spec_);
}

const FieldElem& Poly::lead() const {
  if (c_.empty()) fail(errc::zero_element, "leading coefficient of zero polynomial");
  return c_.back();
}

static void require_same_spec(const Poly& a, const Poly& b) {
  if (a.spec() != b.spec())
    fail(errc::spec_mismatch, a.spec().to_string() + " vs " + b.spec().to_string());
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same_spec(a, b);
  Poly r(a.spec_);
  r.c_.assign(std::max(a.c_.size(), b.c_.size()), FieldElem::zero(a.spec_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  require_same_spec(a, b);
  Poly r(a.spec_);
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, FieldElem::zero(a.spec_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

Poly operator*(const FieldElem& c, const Poly& p) {
  Poly r = p;
  if (c.is_zero()) return Poly(p.spec_);
  for (auto& q : r.c_) q *= c;
  r.trim();
  return r;
}

Poly Poly::pow(unsigned long e) const {
  Poly acc = Poly::constant(FieldElem::one(spec_));
  Poly base = *this;
  while (e) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

Poly Poly::monic() const { return lead().inverse() * *this; }

Poly Poly::derivative() const {
  Poly r(spec_);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r.c_.push_back(FieldElem::from_integer(spec_, (long)i) * c_[i]);
  r.trim();
  return r;
}

FieldElem Poly::eval(const FieldElem& v) const {
  FieldElem r = FieldElem::zero(spec_);
  for (std::size_t i = c_.size(); i-- > 0;) r = r * v + c_[i];
  return r;
}

Poly Poly::compose(const Poly& inner) const {
  require_same_spec(*this, inner);
  Poly r(spec_);
  for (std::size_t i = c_.size(); i-- > 0;) r = r * inner + Poly::constant(c_[i]);
  return r;
}

Poly Poly::scale_arg(const FieldElem& a) const {
  Poly r = *this;
  FieldElem f = FieldElem::one(spec_);
  for (std::size_t i = 1; i < r.c_.size(); ++i) {
    f *= a;
    r.c_[i] *= f;
  }
  r.trim();
  return r;
}

unsigned long Poly::valuation_at_zero() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return i;
  return 0;
}

Poly Poly::shifted_down(unsigned long k) const {
  if (valuation_at_zero() < k && !is_zero())
    fail(errc::spec_mismatch, "shifted_down below valuation");
  Poly r(spec_);
  if (c_.size() > k) r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  require_same_spec(a, b);
  if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(a.spec()), a};
  std::vector<FieldElem> rc = a.coeffs();
  std::vector<FieldElem> qc((std::size_t)(a.degree() - b.degree() + 1),
                            FieldElem::zero(a.spec()));
  FieldElem binv = b.lead().inverse();
  const auto& bc = b.coeffs();
  while (true) {
    while (!rc.empty() && rc.back().is_zero()) rc.pop_back();
    if ((long)rc.size() - 1 < b.degree()) break;
    FieldElem t = rc.back() * binv;
    std::size_t k = rc.size() - bc.size();
    qc[k] = t;
    for (std::size_t i = 0; i + 1 < bc.size(); ++i) rc[k + i] -= t * bc[i];
    rc.pop_back();
  }
  return {Poly::from_coeffs(a.spec(), std::move(qc)), Poly::from_coeffs(a.spec(), std::move(rc))};
}

Poly operator/(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) fail(errc::internal, "inexact polynomial division");
  return q;
}

Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

namespace {

// positive rational c with f/c integral of integer content 1, coordinatewise
// over the power basis in the cyclotomic case
mpq_class rational_content(const Poly& f) {
  mpz_class g = 0, l = 1;
  auto feed = [&](const mpq_class& v) {
    if (sgn(v) == 0) return;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  };
  for (auto& c : f.coeffs()) {
    if (c.spec().kind() == FieldKind::rationals)
      feed(c.rat());
    else
      for (auto& v : c.coords()) feed(v);
  }
  if (g == 0) return 1;
  mpq_class out(g, l);
  out.canonicalize();
  return out;
}

Poly rational_primitive(const Poly& f) {
  mpq_class c = rational_content(f);
  if (c == 1) return f;
  return FieldElem::from_rational(f.spec(), mpq_class(1) / c) * f;
}

// pseudo-remainder: lc(v)^(deg u - deg v + 1) u reduced mod v, no divisions
Poly pseudo_rem(Poly u, const Poly& v) {
  FieldElem lv = v.lead();
  while (!u.is_zero() && u.degree() >= v.degree()) {
    long k = u.degree() - v.degree();
    std::vector<FieldElem> sc((std::size_t)k, FieldElem::zero(u.spec()));
    sc.push_back(u.lead());
    u = lv * u - Poly::from_coeffs(u.spec(), std::move(sc)) * v;
  }
  return u;
}

} // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.spec().characteristic() != 0) {
    Poly u = a, v = b;
    while (!v.is_zero()) {
      Poly r = u % v;
      u = v;
      v = r.is_zero() ? r : r.monic();
    }
    return u.is_zero() ? u : u.monic();
  }
  // primitive pseudo-remainder sequence; monic division over Q lets the
  // numerators square at every step, which is fatal past degree 15 or so
  Poly u = a.is_zero() ? a : rational_primitive(a);
  Poly v = b.is_zero() ? b : rational_primitive(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    Poly r = pseudo_rem(u, v);
    u = std::move(v);
    v = r.is_zero() ? std::move(r) : rational_primitive(r);
  }
  return u.is_zero() ? u : u.monic();
}

namespace {

// coefficientwise p-th root; valid whenever the derivative vanishes in char p
Poly pth_root_poly(const Poly& f, unsigned long p) {
  std::vector<FieldElem> out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i % p == 0) {
      out.push_back(f.coeffs()[i]);
    } else if (!f.coeffs()[i].is_zero()) {
      fail(errc::internal, "p-th root of polynomial with stray coefficient");
    }
  }
  return Poly::from_coeffs(f.spec(), std::move(out));
}

void merge_part(std::map<unsigned long, Poly>& acc, const Poly& g, unsigned long mult) {
  auto it = acc.find(mult);
  if (it == acc.end())
    acc.emplace(mult, g);
  else
    it->second *= g;
}

void sqfr_rec(const Poly& f, unsigned long mult_scale, std::map<unsigned long, Poly>& acc) {
  unsigned long p = f.spec().characteristic();
  if (f.is_constant()) return;
  Poly fp = f.derivative();
  if (p > 0 && fp.is_zero()) {
    sqfr_rec(pth_root_poly(f, p), mult_scale * p, acc);
    return;
  }
  if (p == 0) {
    Poly g = gcd(f, fp);
    Poly w = f / g;
    Poly y = fp / g;
    Poly z = y - w.derivative();
    unsigned long i = 1;
    while (!w.is_constant()) {
      Poly ai = gcd(w, z);
      if (ai.degree() > 0) merge_part(acc, ai, i * mult_scale);
      w = w / ai;
      y = z / ai;
      z = y - w.derivative();
      ++i;
    }
    return;
  }
  Poly c = gcd(f, fp);
  Poly w = f / c;
  unsigned long i = 1;
  while (!w.is_constant()) {
    Poly y = gcd(w, c);
    Poly z = w / y;
    if (z.degree() > 0) merge_part(acc, z, i * mult_scale);
    w = y;
    c = c / y;
    ++i;
  }
  if (!c.is_constant()) sqfr_rec(pth_root_poly(c, p), mult_scale * p, acc);
}

} // namespace

std::vector<std::pair<Poly, unsigned long>> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) fail(errc::zero_element, "squarefree decomposition of zero");
  std::map<unsigned long, Poly> acc;
  sqfr_rec(f.monic(), 1, acc);
  std::vector<std::pair<Poly, unsigned long>> out;
  for (auto& [mult, part] : acc) out.push_back({part.monic(), mult});
  return out;
}

namespace {

std::vector<mpz_class> divisors_mpz(const mpz_class& v, std::size_t cap) {
  std::vector<mpz_class> ds = {mpz_class(1)};
  for (auto& pe : factor_positive(v)) {
    std::size_t base = ds.size();
    mpz_class pk = 1;
    for (unsigned long i = 1; i <= pe.second; ++i) {
      pk *= pe.first;
      for (std::size_t j = 0; j < base; ++j) {
        ds.push_back(ds[j] * pk);
        if (ds.size() > cap) return {};
      }
    }
  }
  return ds;
}

// rational-root scan for a squarefree polynomial with rational coefficients;
// divides the roots out of g
std::vector<FieldElem> rational_roots(Poly& g) {
  const FieldSpec& s = g.spec();
  std::vector<mpq_class> qc;
  for (auto& c : g.coeffs()) {
    auto q = c.as_rational();
    if (!q) return {};
    qc.push_back(*q);
  }
  mpz_class den(1);
  for (auto& q : qc) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<mpz_class> zc;
  for (auto& q : qc) zc.push_back(mpz_class(q * den));
  mpz_class content(0);
  for (auto& z : zc) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
  for (auto& z : zc) z /= content;

  auto rnum = divisors_mpz(abs(zc.front()), 512);
  auto rden = divisors_mpz(abs(zc.back()), 512);
  if (rnum.empty() || rden.empty()) return {};

  std::vector<FieldElem> found;
  for (auto& r : rnum) {
    for (auto& t : rden) {
      for (int sign = 0; sign < 2; ++sign) {
        if (g.degree() < 1) return found;
        mpq_class cand(sign ? -r : r, t);
        cand.canonicalize();
        FieldElem v = FieldElem::from_rational(s, cand);
        if (!g.eval(v).is_zero()) continue;
        Poly lin = Poly::x(s) - Poly::constant(v);
        g = g / lin;
        found.push_back(v);
      }
    }
  }
  return found;
}

// quadratic formula; nullopt when the discriminant has no accessible square root
std::optional<std::array<FieldElem, 2>> quadratic_roots(const Poly& g) {
  const FieldSpec& s = g.spec();
  if (s.characteristic() == 2) return std::nullopt;
  FieldElem a = g.coeff(2), b = g.coeff(1), c = g.coeff(0);
  FieldElem disc = b * b - FieldElem::from_integer(s, 4) * a * c;
  auto sq = nth_root_in_field(disc, 2);
  if (!sq) return std::nullopt;
  FieldElem inv2a = (FieldElem::from_integer(s, 2) * a).inverse();
  return std::array<FieldElem, 2>{(-b + *sq) * inv2a, (-b - *sq) * inv2a};
}

void resolve_squarefree(Poly g, unsigned long mult, RootList& out) {
  const FieldSpec& s = g.spec();
  g = g.monic();

  if (s.kind() == FieldKind::prime_field && s.p() <= 65536) {
    for (unsigned long v = 0; v < s.p() && g.degree() >= 1; ++v) {
      FieldElem fv = FieldElem::from_integer(s, (long)v);
      if (!g.eval(fv).is_zero()) continue;
      out.roots.push_back({fv, mult});
      g = g / (Poly::x(s) - Poly::constant(fv));
    }
    return; // full scan: the residual provably has no roots in F_p
  }

  if (s.kind() != FieldKind::prime_field) {
    for (auto& r : rational_roots(g)) out.roots.push_back({r, mult});
  }
  if (g.degree() == 1) {
    out.roots.push_back({-g.coeff(0), mult});
    return;
  }
  if (g.degree() == 2) {
    if (auto rr = quadratic_roots(g)) {
      out.roots.push_back({(*rr)[0], mult});
      out.roots.push_back({(*rr)[1], mult});
      return;
    }
  }
  if (g.degree() >= 2) out.unresolved.push_back(g);
}

} // namespace

RootList roots_in_field(const Poly& f) {
  if (f.is_zero()) fail(errc::zero_element, "roots of the zero polynomial");
  RootList out;
  unsigned long k = f.valuation_at_zero();
  Poly g = f.shifted_down(k);
  if (k > 0) out.roots.push_back({FieldElem::zero(f.spec()), k});
  if (g.is_constant()) return out;
  for (auto& [part, mult] : squarefree_decomposition(g)) resolve_squarefree(part, mult, out);
  return out;
}

std::string scalar_display(const FieldElem& c) {
  if (c.spec().kind() == FieldKind::prime_field) return std::to_string(c.res());
  return c.to_string();
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    std::string disp = scalar_display(c_[k]);
    bool multi = disp.find(' ') != std::string::npos;
    bool neg = !multi && disp.size() > 1 && disp[0] == '-';
    std::string mag = neg ? disp.substr(1) : disp;
    if (first) {
      first = false;
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    if (multi) {
      out << "(" << disp << ")";
      if (k > 0) out << "*";
    } else if (mag != "1" || k == 0) {
      out << mag;
      if (k > 0) out << "*";
    }
    if (k >= 2)
      out << var << "^" << k;
    else if (k == 1)
      out << var;
  }
  return out.str();
}

} // namespace cremona
