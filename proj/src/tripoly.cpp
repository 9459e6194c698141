#include "cremona/tripoly.hpp"

#include <limits>
#include <optional>
#include <sstream>
#include <utility>

namespace cremona {

TriPoly TriPoly::monomial(const FieldElem& c, Mono m) {
  TriPoly p(c.spec());
  if (!c.is_zero()) p.t_.emplace(m, c);
  return p;
}

TriPoly TriPoly::variable(const FieldSpec& s, int axis) {
  Mono m{0, 0, 0};
  m[(std::size_t)axis] = 1;
  return monomial(FieldElem::one(s), m);
}

long TriPoly::total_degree() const {
  long d = -1;
  for (auto& [m, c] : t_) d = std::max(d, (long)(m[0] + m[1] + m[2]));
  return d;
}

bool TriPoly::is_homogeneous() const {
  long d = -1;
  for (auto& [m, c] : t_) {
    long dm = (long)(m[0] + m[1] + m[2]);
    if (d == -1) d = dm;
    if (dm != d) return false;
  }
  return true;
}

void TriPoly::add_term(Mono m, const FieldElem& c) {
  if (c.spec() != spec_) fail(errc::spec_mismatch, "term from a different field");
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

TriPoly TriPoly::operator-() const {
  TriPoly r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

TriPoly operator+(const TriPoly& a, const TriPoly& b) {
  if (a.spec_ != b.spec_) fail(errc::spec_mismatch, "trivariate sum across fields");
  TriPoly r = a;
  for (auto& [m, c] : b.t_) r.add_term(m, c);
  return r;
}

TriPoly operator-(const TriPoly& a, const TriPoly& b) { return a + (-b); }

namespace {

// packed accumulation over the (X,Y)-exponent triangle; homogeneity pins the
// Z exponent, so heavy products avoid per-term map lookups entirely
TriPoly dense_homog_mul(const TriPoly& a, const TriPoly& b, long d) {
  const FieldSpec& s = a.spec();
  std::size_t stride = (std::size_t)d + 1;
  std::vector<FieldElem> acc(stride * stride, FieldElem::zero(s));
  std::vector<bool> hit(stride * stride, false);
  for (auto& [ma, ca] : a.terms())
    for (auto& [mb, cb] : b.terms()) {
      std::size_t slot = (std::size_t)(ma[0] + mb[0]) * stride + (ma[1] + mb[1]);
      acc[slot] += ca * cb;
      hit[slot] = true;
    }
  TriPoly r(s);
  for (std::size_t i = 0; i < stride; ++i)
    for (std::size_t j = 0; j + i < stride; ++j) {
      std::size_t slot = i * stride + j;
      if (!hit[slot] || acc[slot].is_zero()) continue;
      r.raw_insert(Mono{(unsigned)i, (unsigned)j, (unsigned)(d - (long)i - (long)j)},
                   std::move(acc[slot]));
    }
  return r;
}

} // namespace

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  if (a.spec_ != b.spec_) fail(errc::spec_mismatch, "trivariate product across fields");
  std::size_t na = a.t_.size(), nb = b.t_.size();
  if (na >= 24 && nb >= 24 && (double)na * (double)nb > 1.5e5 && a.is_homogeneous() &&
      b.is_homogeneous()) {
    long d = a.total_degree() + b.total_degree();
    if ((d + 1) * (d + 2) / 2 <= 2000000) return dense_homog_mul(a, b, d);
  }
  TriPoly r(a.spec_);
  for (auto& [ma, ca] : a.t_)
    for (auto& [mb, cb] : b.t_)
      r.add_term(Mono{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
  return r;
}

TriPoly operator*(const FieldElem& c, const TriPoly& p) {
  TriPoly r(p.spec_);
  if (c.is_zero()) return r;
  r.t_ = p.t_;
  for (auto& [m, q] : r.t_) q *= c;
  return r;
}

FieldElem TriPoly::eval(const FieldElem& X, const FieldElem& Y, const FieldElem& Z) const {
  FieldElem acc = FieldElem::zero(spec_);
  for (auto& [m, c] : t_) acc += c * X.pow((long)m[0]) * Y.pow((long)m[1]) * Z.pow((long)m[2]);
  return acc;
}

TriPoly TriPoly::substitute(const TriPoly& P, const TriPoly& Q, const TriPoly& R) const {
  TriPoly res(spec_);
  if (t_.empty()) return res;
  unsigned maxc = 0, maxa = 0;
  for (auto& [m, c] : t_) {
    maxc = std::max(maxc, m[2]);
    maxa = std::max(maxa, m[0]);
  }
  std::vector<TriPoly> rp;
  rp.push_back(TriPoly::monomial(FieldElem::one(spec_), {0, 0, 0}));
  for (unsigned i = 1; i <= maxc; ++i) rp.push_back(rp.back() * R);

  std::map<unsigned, std::map<unsigned, TriPoly>> by_ab;
  for (auto& [m, c] : t_) {
    auto& slot = by_ab[m[0]];
    auto it = slot.find(m[1]);
    if (it == slot.end())
      slot.emplace(m[1], c * rp[m[2]]);
    else
      it->second += c * rp[m[2]];
  }

  for (long a = (long)maxa; a >= 0; --a) {
    if (a != (long)maxa) res *= P;
    auto ait = by_ab.find((unsigned)a);
    if (ait == by_ab.end()) continue;
    unsigned maxb = ait->second.rbegin()->first;
    TriPoly acc(spec_);
    for (long b = (long)maxb; b >= 0; --b) {
      if (b != (long)maxb) acc *= Q;
      auto bit = ait->second.find((unsigned)b);
      if (bit != ait->second.end()) acc += bit->second;
    }
    res += acc;
  }
  return res;
}

Mono TriPoly::monomial_content() const {
  if (t_.empty()) fail(errc::zero_element, "monomial content of zero");
  Mono m{std::numeric_limits<unsigned>::max(), std::numeric_limits<unsigned>::max(),
         std::numeric_limits<unsigned>::max()};
  for (auto& [k, c] : t_)
    for (int i = 0; i < 3; ++i) m[(std::size_t)i] = std::min(m[(std::size_t)i], k[(std::size_t)i]);
  return m;
}

TriPoly TriPoly::shifted_down(Mono m) const {
  TriPoly r(spec_);
  for (auto& [k, c] : t_) {
    if (k[0] < m[0] || k[1] < m[1] || k[2] < m[2])
      fail(errc::spec_mismatch, "monomial shift below content");
    r.t_.emplace(Mono{k[0] - m[0], k[1] - m[1], k[2] - m[2]}, c);
  }
  return r;
}

std::string TriPoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const Mono& m = it->first;
    std::string disp = scalar_display(it->second);
    bool multi = disp.find(' ') != std::string::npos;
    bool neg = !multi && disp.size() > 1 && disp[0] == '-';
    std::string mag = neg ? disp.substr(1) : disp;
    if (first) {
      first = false;
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    bool any_var = m[0] + m[1] + m[2] > 0;
    bool coef_shown = false;
    if (multi) {
      out << "(" << disp << ")";
      coef_shown = true;
    } else if (mag != "1" || !any_var) {
      out << mag;
      coef_shown = true;
    }
    const char* names[3] = {"X", "Y", "Z"};
    for (int i = 0; i < 3; ++i) {
      unsigned e = m[(std::size_t)i];
      if (e == 0) continue;
      if (coef_shown) out << "*";
      out << names[i];
      if (e > 1) out << "^" << e;
      coef_shown = true;
    }
  }
  return out.str();
}

// ---- bivariate helpers for gcd/exact division of homogeneous polynomials ----

namespace {

using BiPoly = std::vector<Poly>; // index = power of x, entries in K[y]

void biv_trim(BiPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

BiPoly to_biv(const TriPoly& p, const FieldSpec& s) {
  BiPoly out;
  for (auto& [m, c] : p.terms()) {
    if (out.size() <= m[0]) out.resize(m[0] + 1, Poly(s));
    out[m[0]] += Poly::monomial(c, m[1]);
  }
  biv_trim(out);
  return out;
}

TriPoly from_biv(const BiPoly& b, const FieldSpec& s, long target_deg) {
  TriPoly out(s);
  for (std::size_t a = 0; a < b.size(); ++a) {
    for (std::size_t i = 0; i < (std::size_t)(b[a].degree() + 1); ++i) {
      FieldElem c = b[a].coeff(i);
      if (c.is_zero()) continue;
      long zexp = target_deg - (long)a - (long)i;
      if (zexp < 0) fail(errc::internal, "homogenization degree too small");
      out.add_term(Mono{(unsigned)a, (unsigned)i, (unsigned)zexp}, c);
    }
  }
  return out;
}

Poly biv_content(const BiPoly& a) {
  Poly g(a.empty() ? FieldSpec::rationals() : a[0].spec());
  for (auto& p : a) g = gcd(g, p);
  return g;
}

BiPoly biv_div_poly(const BiPoly& a, const Poly& d) {
  BiPoly r = a;
  for (auto& p : r) p = p / d;
  return r;
}

BiPoly biv_primitive(BiPoly a) {
  biv_trim(a);
  if (a.empty()) return a;
  return biv_div_poly(a, biv_content(a));
}

// pseudo-remainder of A by B (B nonzero, trimmed)
BiPoly biv_prem(BiPoly A, const BiPoly& B) {
  biv_trim(A);
  const Poly& lcB = B.back();
  while (A.size() >= B.size()) {
    Poly lcA = A.back();
    std::size_t shift = A.size() - B.size();
    for (auto& p : A) p = p * lcB;
    for (std::size_t i = 0; i < B.size(); ++i) A[shift + i] -= lcA * B[i];
    biv_trim(A);
    if (A.empty()) break;
  }
  return A;
}

// division that reports failure instead of throwing; returns the quotient
std::optional<BiPoly> biv_try_div(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  biv_trim(r);
  if (r.empty()) return r;
  if (b.empty() || r.size() < b.size()) return std::nullopt;
  const FieldSpec& s = r[0].spec();
  BiPoly q(r.size() - b.size() + 1, Poly(s));
  while (true) {
    biv_trim(r);
    if (r.empty()) break;
    if (r.size() < b.size()) return std::nullopt;
    auto [t, rem] = divrem(r.back(), b.back());
    if (!rem.is_zero()) return std::nullopt;
    std::size_t shift = r.size() - b.size();
    q[shift] = t;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= t * b[i];
  }
  return q;
}

// The pseudo-remainder sequence below is exact but its intermediate
// coefficients blow up badly even when both inputs and the gcd stay small.
// Over Q we instead compute the gcd modulo word-size primes by evaluation
// and interpolation in y, lift through CRT, reconstruct the rational
// coefficients, and certify the candidate by exact division of both inputs.
// Any failure along the way falls back to the pseudo-remainder sequence.

using PolyP = std::vector<unsigned long>; // mod-p coefficients, low to high

void pp_trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned long pp_mul(unsigned long a, unsigned long b, unsigned long p) {
  return a * b % p; // p < 2^31, so the product fits
}

unsigned long pp_pow(unsigned long a, unsigned long e, unsigned long p) {
  unsigned long r = 1;
  while (e) {
    if (e & 1) r = pp_mul(r, a, p);
    a = pp_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

unsigned long pp_inv(unsigned long a, unsigned long p) { return pp_pow(a, p - 2, p); }

PolyP pp_gcd(PolyP a, PolyP b, unsigned long p) {
  pp_trim(a);
  pp_trim(b);
  while (!b.empty()) {
    unsigned long binv = pp_inv(b.back(), p);
    while (a.size() >= b.size()) {
      unsigned long t = pp_mul(a.back(), binv, p);
      std::size_t k = a.size() - b.size();
      for (std::size_t i = 0; i + 1 < b.size(); ++i)
        a[k + i] = (a[k + i] + p - pp_mul(t, b[i], p)) % p;
      a.pop_back();
      pp_trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    unsigned long u = pp_inv(a.back(), p);
    for (auto& c : a) c = pp_mul(c, u, p);
  }
  return a;
}

// quotient of an exact division; garbage if not exact, which the final
// certification step catches anyway
PolyP pp_divexact(PolyP a, const PolyP& b, unsigned long p) {
  pp_trim(a);
  if (a.size() < b.size()) return {};
  PolyP q(a.size() - b.size() + 1, 0);
  unsigned long binv = pp_inv(b.back(), p);
  while (a.size() >= b.size()) {
    unsigned long t = pp_mul(a.back(), binv, p);
    std::size_t k = a.size() - b.size();
    q[k] = t;
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
      a[k + i] = (a[k + i] + p - pp_mul(t, b[i], p)) % p;
    a.pop_back();
    pp_trim(a);
    if (a.empty()) break;
  }
  return q;
}

unsigned long pp_eval(const PolyP& f, unsigned long a, unsigned long p) {
  unsigned long r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = (pp_mul(r, a, p) + f[i]) % p;
  return r;
}

// Newton interpolation through (xs[i], ys[i]); the xs are distinct
PolyP pp_interp(const std::vector<unsigned long>& xs, std::vector<unsigned long> dd,
                unsigned long p) {
  std::size_t n = xs.size();
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      unsigned long num = (dd[i] + p - dd[i - 1]) % p;
      unsigned long den = (xs[i] + p - xs[i - k]) % p;
      dd[i] = pp_mul(num, pp_inv(den, p), p);
      if (i == k) break;
    }
  PolyP out{dd[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    out.insert(out.begin(), 0);
    for (std::size_t t = 0; t + 1 < out.size(); ++t)
      out[t] = (out[t] + p - pp_mul(out[t + 1], xs[i], p)) % p;
    out[0] = (out[0] + dd[i]) % p;
  }
  pp_trim(out);
  return out;
}

const std::vector<unsigned long>& crt_primes() {
  static const std::vector<unsigned long> ps = [] {
    std::vector<unsigned long> v;
    mpz_class q = 1000000000;
    while (v.size() < 16) {
      mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
      v.push_back(q.get_ui());
    }
    return v;
  }();
  return ps;
}

// integer form of a BiPoly over Q: zs[i][j] = coefficient of x^i y^j after
// clearing the common denominator and the integer content
struct ZBiv {
  std::vector<std::vector<mpz_class>> zs;
  std::size_t ydeg = 0;
};

ZBiv biv_integralize(const BiPoly& a) {
  ZBiv out;
  mpz_class den = 1;
  for (auto& row : a)
    for (std::size_t j = 0; j < (std::size_t)(row.degree() + 1); ++j)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), row.coeff(j).rat().get_den().get_mpz_t());
  mpz_class g = 0;
  out.zs.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.zs[i].resize((std::size_t)(a[i].degree() + 1));
    if (!a[i].is_zero()) out.ydeg = std::max(out.ydeg, (std::size_t)a[i].degree());
    for (std::size_t j = 0; j < out.zs[i].size(); ++j) {
      mpq_class v = a[i].coeff(j).rat() * den;
      out.zs[i][j] = v.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.zs[i][j].get_mpz_t());
    }
  }
  if (g > 1)
    for (auto& row : out.zs)
      for (auto& z : row) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
  return out;
}

// reduction mod p; false when the leading term's top integer vanishes,
// which would change the shape of the gcd computation
bool zbiv_mod(const ZBiv& z, unsigned long p, std::vector<PolyP>& out) {
  out.assign(z.zs.size(), {});
  for (std::size_t i = 0; i < z.zs.size(); ++i) {
    out[i].resize(z.zs[i].size());
    for (std::size_t j = 0; j < z.zs[i].size(); ++j)
      out[i][j] = mpz_fdiv_ui(z.zs[i][j].get_mpz_t(), p);
    pp_trim(out[i]);
  }
  return !out.empty() && !out.back().empty() && out.back().size() == z.zs.back().size();
}

PolyP biv_eval_y(const std::vector<PolyP>& f, unsigned long a, unsigned long p) {
  PolyP out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = pp_eval(f[i], a, p);
  pp_trim(out);
  return out;
}

struct ModImage {
  std::vector<PolyP> g; // primitive in y, scaled so the top coefficient is 1
  bool trivial = false;
};

// Brown's algorithm at a single prime: evaluate at y-points that preserve
// both leading coefficients, take monic univariate gcds in x, interpolate
// gamma(a) times each point gcd, then strip the y-content
std::optional<ModImage> biv_gcd_mod_p(const ZBiv& za, const ZBiv& zb, unsigned long p) {
  std::vector<PolyP> A, B;
  if (!zbiv_mod(za, p, A) || !zbiv_mod(zb, p, B)) return std::nullopt;
  PolyP gam = pp_gcd(A.back(), B.back(), p);
  std::size_t need = (gam.size() - 1) + std::min(A.size(), B.size());
  std::vector<unsigned long> xs;
  std::vector<PolyP> vals;
  std::size_t dmin = std::numeric_limits<std::size_t>::max();
  for (unsigned long a = 0; a < p && xs.size() < need; ++a) {
    if (pp_eval(A.back(), a, p) == 0 || pp_eval(B.back(), a, p) == 0) continue;
    PolyP ga = pp_gcd(biv_eval_y(A, a, p), biv_eval_y(B, a, p), p);
    if (ga.size() == 1) return ModImage{{}, true}; // coprime at a good point
    if (ga.size() - 1 > dmin) continue;            // unlucky evaluation point
    if (ga.size() - 1 < dmin) {
      dmin = ga.size() - 1;
      xs.clear();
      vals.clear();
    }
    unsigned long gv = pp_eval(gam, a, p);
    for (auto& c : ga) c = pp_mul(c, gv, p);
    xs.push_back(a);
    vals.push_back(std::move(ga));
  }
  if (xs.size() < need) return std::nullopt;
  std::vector<PolyP> H(dmin + 1);
  std::vector<unsigned long> ys(xs.size());
  for (std::size_t i = 0; i <= dmin; ++i) {
    for (std::size_t k = 0; k < xs.size(); ++k) ys[k] = vals[k][i];
    H[i] = pp_interp(xs, ys, p);
  }
  PolyP c = H[0];
  for (std::size_t i = 1; i <= dmin; ++i) c = pp_gcd(std::move(c), H[i], p);
  for (auto& row : H)
    if (!row.empty()) row = pp_divexact(std::move(row), c, p);
  if (H.back().empty()) return std::nullopt;
  unsigned long u = pp_inv(H.back().back(), p);
  if (u != 1)
    for (auto& row : H)
      for (auto& v : row) v = pp_mul(v, u, p);
  return ModImage{std::move(H), false};
}

std::optional<mpq_class> rat_recon(const mpz_class& a, const mpz_class& M) {
  mpz_class bnd;
  mpz_class half = M / 2;
  mpz_sqrt(bnd.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = M, r1 = a, t0 = 0, t1 = 1;
  while (r1 > bnd) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0) return std::nullopt;
  if (sgn(t1) < 0) {
    t1 = -t1;
    r1 = -r1;
  }
  if (t1 > bnd) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1 && sgn(r1) != 0) return std::nullopt;
  mpq_class out(r1, t1);
  out.canonicalize();
  return out;
}

// inputs are primitive with positive x-degree; result matches the canonical
// form of the pseudo-remainder path up to the shared final normalization
std::optional<BiPoly> biv_gcd_modular(const BiPoly& A, const BiPoly& B) {
  const FieldSpec& s = A[0].spec();
  ZBiv za = biv_integralize(A), zb = biv_integralize(B);
  std::size_t ymax = std::min(za.ydeg, zb.ydeg);
  std::vector<std::vector<mpz_class>> acc;
  mpz_class M = 1;
  std::pair<std::size_t, std::size_t> shape{std::numeric_limits<std::size_t>::max(), 0};
  bool have = false;
  for (unsigned long p : crt_primes()) {
    auto img = biv_gcd_mod_p(za, zb, p);
    if (!img) continue;
    if (img->trivial) return BiPoly{Poly::from_coeffs(s, {FieldElem::one(s)})};
    bool ok = true;
    std::size_t ydeg = 0;
    for (auto& row : img->g) {
      if (row.size() > ymax + 1) {
        ok = false;
        break;
      }
      if (!row.empty()) ydeg = std::max(ydeg, row.size() - 1);
    }
    if (!ok) continue;
    std::pair<std::size_t, std::size_t> sh{img->g.size() - 1, ydeg};
    if (sh < shape) { // smaller degrees mean the earlier primes were unlucky
      shape = sh;
      acc.assign(img->g.size(), std::vector<mpz_class>(ymax + 1, 0));
      M = 1;
      have = false;
    } else if (shape < sh) {
      continue;
    }
    if (!have) {
      for (std::size_t i = 0; i < acc.size(); ++i)
        for (std::size_t j = 0; j <= ymax; ++j)
          acc[i][j] = (i < img->g.size() && j < img->g[i].size()) ? mpz_class(img->g[i][j])
                                                                  : mpz_class(0);
      M = (unsigned long)p;
      have = true;
    } else {
      unsigned long minv = pp_inv(mpz_fdiv_ui(M.get_mpz_t(), p), p);
      for (std::size_t i = 0; i < acc.size(); ++i)
        for (std::size_t j = 0; j <= ymax; ++j) {
          unsigned long sp = (i < img->g.size() && j < img->g[i].size()) ? img->g[i][j] : 0;
          unsigned long rp = mpz_fdiv_ui(acc[i][j].get_mpz_t(), p);
          unsigned long d = pp_mul((sp + p - rp) % p, minv, p);
          acc[i][j] += M * mpz_class(d);
        }
      M *= (unsigned long)p;
    }
    BiPoly cand;
    cand.reserve(acc.size());
    bool full = true;
    for (std::size_t i = 0; i < acc.size() && full; ++i) {
      std::vector<FieldElem> cs;
      cs.reserve(ymax + 1);
      for (std::size_t j = 0; j <= ymax; ++j) {
        auto v = rat_recon(acc[i][j], M);
        if (!v) {
          full = false;
          break;
        }
        cs.push_back(FieldElem::from_rational(s, *v));
      }
      if (full) cand.push_back(Poly::from_coeffs(s, std::move(cs)));
    }
    if (!full) continue;
    biv_trim(cand);
    if (cand.size() != shape.first + 1) continue;
    if (!biv_try_div(A, cand) || !biv_try_div(B, cand)) continue;
    return cand;
  }
  return std::nullopt;
}

BiPoly biv_gcd(BiPoly A, BiPoly B) {
  biv_trim(A);
  biv_trim(B);
  if (A.empty()) return biv_primitive(std::move(B));
  if (B.empty()) return biv_primitive(std::move(A));
  Poly cont = gcd(biv_content(A), biv_content(B));
  A = biv_primitive(std::move(A));
  B = biv_primitive(std::move(B));
  bool done = false;
  if (A.size() >= 2 && B.size() >= 2 && A[0].spec().kind() == FieldKind::rationals) {
    if (auto g = biv_gcd_modular(A, B)) {
      A = std::move(*g);
      done = true;
    }
  }
  if (!done)
    while (!B.empty()) {
      BiPoly R = biv_prem(A, B);
      A = std::move(B);
      B = biv_primitive(std::move(R));
    }
  for (auto& p : A) p = p * cont;
  // canonical scale: leading coefficient (a poly in y) made monic
  FieldElem lc = A.back().lead();
  if (!lc.is_one()) {
    FieldElem u = lc.inverse();
    for (auto& p : A) p = u * p;
  }
  return A;
}

BiPoly biv_divexact(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  biv_trim(r);
  if (r.empty()) return r;
  if (b.empty()) fail(errc::division_by_zero, "bivariate division by zero");
  if (r.size() < b.size()) fail(errc::internal, "inexact bivariate division");
  const FieldSpec& s = r[0].spec();
  BiPoly q(r.size() - b.size() + 1, Poly(s));
  while (true) {
    biv_trim(r);
    if (r.empty()) break;
    if (r.size() < b.size()) fail(errc::internal, "inexact bivariate division");
    Poly t = r.back() / b.back();
    std::size_t shift = r.size() - b.size();
    q[shift] = t;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= t * b[i];
  }
  return q;
}

} // namespace

TriPoly tri_gcd(const std::vector<TriPoly>& ps) {
  if (ps.empty()) fail(errc::spec_mismatch, "gcd of an empty family");
  const FieldSpec& s = ps[0].spec();
  Mono common{std::numeric_limits<unsigned>::max(), std::numeric_limits<unsigned>::max(),
              std::numeric_limits<unsigned>::max()};
  for (auto& p : ps) {
    if (!p.is_homogeneous() || p.is_zero())
      fail(errc::not_homogeneous, "gcd needs nonzero homogeneous inputs");
    Mono m = p.monomial_content();
    for (int i = 0; i < 3; ++i)
      common[(std::size_t)i] = std::min(common[(std::size_t)i], m[(std::size_t)i]);
  }
  // a single-term input forces a monomial gcd
  for (auto& p : ps)
    if (p.term_count() == 1) return TriPoly::monomial(FieldElem::one(s), common);
  BiPoly g;
  bool started = false;
  for (auto& p : ps) {
    BiPoly bp = to_biv(p.shifted_down(common), s);
    g = started ? biv_gcd(std::move(g), std::move(bp)) : std::move(bp);
    started = true;
    if (g.size() == 1 && g[0].degree() == 0) break;
  }
  long tdeg = -1;
  for (std::size_t a = 0; a < g.size(); ++a)
    tdeg = std::max(tdeg, (long)a + g[a].degree());
  TriPoly out = from_biv(g, s, tdeg) * TriPoly::monomial(FieldElem::one(s), common);
  FieldElem head = out.terms().begin()->second;
  if (!head.is_one()) out = head.inverse() * out;
  return out;
}

TriPoly tri_divexact(const TriPoly& a, const TriPoly& b) {
  if (a.spec() != b.spec()) fail(errc::spec_mismatch, "division across fields");
  if (b.is_zero()) fail(errc::division_by_zero, "trivariate division by zero");
  if (a.is_zero()) return a;
  if (!a.is_homogeneous() || !b.is_homogeneous())
    fail(errc::not_homogeneous, "exact division needs homogeneous inputs");
  Mono mb = b.monomial_content();
  TriPoly a2 = a.shifted_down(mb); // b | a, so the monomial part divides too
  TriPoly b2 = b.shifted_down(mb);
  if (b2.term_count() == 1) {
    auto& [m, c] = *b2.terms().begin();
    return c.inverse() * a2.shifted_down(m);
  }
  const FieldSpec& s = a.spec();
  BiPoly q = biv_divexact(to_biv(a2, s), to_biv(b2, s));
  return from_biv(q, s, a2.total_degree() - b2.total_degree());
}

} // namespace cremona
