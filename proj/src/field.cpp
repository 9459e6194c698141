#include "cremona/field.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "cremona/intlat.hpp"

namespace cremona {

namespace {

unsigned long gcd_ul(unsigned long a, unsigned long b) {
  while (b) {
    unsigned long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long p) {
  return (unsigned long)(((__uint128_t)a * b) % p);
}

unsigned long powmod(unsigned long a, unsigned long e, unsigned long p) {
  unsigned long r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

unsigned long invmod(unsigned long a, unsigned long p) {
  long long t = 0, nt = 1;
  long long r = (long long)p, nr = (long long)(a % p);
  while (nr) {
    long long q = r / nr;
    long long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) fail(errc::zero_element, "not invertible mod p");
  return (unsigned long)((t % (long long)p + (long long)p) % (long long)p);
}

std::vector<std::pair<unsigned long, unsigned long>> factor_ul(unsigned long v) {
  std::vector<std::pair<unsigned long, unsigned long>> f;
  for (unsigned long d = 2; d * d <= v; d += (d == 2 ? 1 : 2)) {
    if (v % d) continue;
    unsigned long e = 0;
    while (v % d == 0) {
      v /= d;
      ++e;
    }
    f.push_back({d, e});
  }
  if (v > 1) f.push_back({v, 1});
  return f;
}

// ---- dense rational polynomials, internal to the cyclotomic arithmetic ----

using QPoly = std::vector<mpq_class>;
using ZPoly = std::vector<mpz_class>;

void qp_trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  qp_trim(r);
  return r;
}

QPoly qp_rem_monic(QPoly a, const ZPoly& monic) {
  qp_trim(a);
  std::size_t d = monic.size() - 1;
  while (a.size() > d) {
    mpq_class lead = a.back();
    std::size_t shift = a.size() - 1 - d;
    if (lead != 0)
      for (std::size_t i = 0; i < d; ++i) a[shift + i] -= lead * monic[i];
    a.pop_back();
    qp_trim(a);
  }
  return a;
}

// half extended euclid: returns monic g = gcd(a, b) and u with u*a = g (mod b)
void qp_half_ext_gcd(QPoly a, QPoly b, QPoly& g, QPoly& u) {
  QPoly u0 = {mpq_class(1)}, u1 = {};
  qp_trim(a);
  qp_trim(b);
  while (!b.empty()) {
    QPoly q;
    QPoly r = a;
    while (!r.empty() && r.size() >= b.size()) {
      mpq_class c = r.back() / b.back();
      std::size_t shift = r.size() - b.size();
      if (q.size() < shift + 1) q.resize(shift + 1, mpq_class(0));
      q[shift] += c;
      for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
      qp_trim(r);
    }
    QPoly qu1 = qp_mul(q, u1);
    QPoly nu(std::max(u0.size(), qu1.size()), mpq_class(0));
    for (std::size_t i = 0; i < u0.size(); ++i) nu[i] += u0[i];
    for (std::size_t i = 0; i < qu1.size(); ++i) nu[i] -= qu1[i];
    qp_trim(nu);
    a = b;
    b = r;
    u0 = u1;
    u1 = nu;
  }
  g = a;
  u = u0;
  if (!g.empty() && g.back() != 1) {
    mpq_class lc = g.back();
    for (auto& c : g) c /= lc;
    for (auto& c : u) c /= lc;
  }
}

// exact division of integer polynomials (divisor monic)
ZPoly zp_divexact(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  std::size_t qsize = a.size() - b.size() + 1;
  ZPoly q(qsize, mpz_class(0));
  for (std::size_t k = qsize; k-- > 0;) {
    mpz_class c = r[k + b.size() - 1] / b.back();
    q[k] = c;
    if (c != 0)
      for (std::size_t i = 0; i < b.size(); ++i) r[k + i] -= c * b[i];
  }
  return q;
}

const ZPoly& cyclo_poly(unsigned long n) {
  static std::map<unsigned long, ZPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::function<const ZPoly&(unsigned long)> build = [&](unsigned long m) -> const ZPoly& {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    ZPoly num(m + 1, mpz_class(0));
    num[0] = -1;
    num[m] = 1;
    for (unsigned long d = 1; d < m; ++d) {
      if (m % d) continue;
      num = zp_divexact(num, build(d));
    }
    return cache.emplace(m, std::move(num)).first->second;
  };
  return build(n);
}

std::vector<mpq_class> reduce_cyclo(QPoly v, unsigned long n) {
  const ZPoly& phi = cyclo_poly(n);
  QPoly r = qp_rem_monic(std::move(v), phi);
  r.resize(phi.size() - 1, mpq_class(0));
  return r;
}

unsigned long fp_generator(unsigned long p) {
  if (p == 2) return 1;
  auto fac = factor_ul(p - 1);
  for (unsigned long g = 2; g < p; ++g) {
    bool ok = true;
    for (auto& qe : fac) {
      if (powmod(g, (p - 1) / qe.first, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  fail(errc::internal, "no generator mod p");
}

// baby-step giant-step in F_p^*
unsigned long fp_dlog(unsigned long a, unsigned long g, unsigned long p) {
  unsigned long ord = p - 1;
  unsigned long m = 1;
  while (m * m < ord) ++m;
  std::unordered_map<unsigned long, unsigned long> baby;
  baby.reserve(2 * m);
  unsigned long cur = 1;
  for (unsigned long j = 0; j < m; ++j) {
    baby.emplace(cur, j);
    cur = mulmod(cur, g, p);
  }
  unsigned long giant = invmod(powmod(g, m, p), p);
  unsigned long x = a % p;
  for (unsigned long i = 0; i <= m; ++i) {
    auto it = baby.find(x);
    if (it != baby.end()) return (i * m + it->second) % ord;
    x = mulmod(x, giant, p);
  }
  fail(errc::internal, "dlog target not in group");
}

} // namespace

// ---- FieldSpec ---------------------------------------------------------------

FieldSpec FieldSpec::rationals() { return FieldSpec(FieldKind::rationals, 0, 0); }

FieldSpec FieldSpec::cyclotomic(unsigned long n) {
  if (n == 0) fail(errc::spec_mismatch, "cyclotomic index must be >= 1");
  return FieldSpec(FieldKind::cyclotomic, n, 0);
}

FieldSpec FieldSpec::prime_field(unsigned long p) {
  if (p < 2 || p > (1ul << 31))
    fail(errc::spec_mismatch, "prime field characteristic out of range");
  mpz_class z(p);
  if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
    fail(errc::spec_mismatch, "characteristic is not prime: " + std::to_string(p));
  return FieldSpec(FieldKind::prime_field, 0, p);
}

unsigned long FieldSpec::extension_degree() const {
  return kind_ == FieldKind::cyclotomic ? euler_phi(n_) : 1;
}

unsigned long FieldSpec::torsion_order() const {
  switch (kind_) {
    case FieldKind::rationals: return 2;
    case FieldKind::cyclotomic: return n_ % 2 == 0 ? n_ : 2 * n_;
    case FieldKind::prime_field: return p_ - 1;
  }
  return 2;
}

std::string FieldSpec::to_string() const {
  switch (kind_) {
    case FieldKind::rationals: return "Q";
    case FieldKind::cyclotomic: return "Qzeta:" + std::to_string(n_);
    case FieldKind::prime_field: return "Fp:" + std::to_string(p_);
  }
  return "?";
}

FieldSpec FieldSpec::parse(const std::string& s) {
  if (s == "Q") return rationals();
  auto tail_number = [&](std::size_t at) -> unsigned long {
    std::string t = s.substr(at);
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
      fail(errc::spec_mismatch, "bad field spec: " + s);
    return std::stoul(t);
  };
  if (s.rfind("Qzeta:", 0) == 0) return cyclotomic(tail_number(6));
  if (s.rfind("Fp:", 0) == 0) return prime_field(tail_number(3));
  fail(errc::spec_mismatch, "bad field spec: " + s);
}

unsigned long euler_phi(unsigned long n) {
  if (n == 0) return 0;
  unsigned long r = n;
  for (auto& pe : factor_ul(n)) r -= r / pe.first;
  return r;
}

std::vector<unsigned long> divisors_of(unsigned long n) {
  std::vector<unsigned long> d;
  for (unsigned long i = 1; i * i <= n; ++i) {
    if (n % i) continue;
    d.push_back(i);
    if (i != n / i) d.push_back(n / i);
  }
  std::sort(d.begin(), d.end());
  return d;
}

// ---- FieldElem -----------------------------------------------------------------

FieldElem::FieldElem(FieldSpec spec) : spec_(spec) {
  if (spec_.kind() == FieldKind::cyclotomic)
    cyc_.assign(spec_.extension_degree(), mpq_class(0));
}

FieldElem FieldElem::one(const FieldSpec& s) { return from_integer(s, 1); }

FieldElem FieldElem::from_integer(const FieldSpec& s, long v) {
  return from_integer(s, mpz_class(v));
}

FieldElem FieldElem::from_integer(const FieldSpec& s, const mpz_class& v) {
  FieldElem e(s);
  switch (s.kind()) {
    case FieldKind::rationals: e.rat_ = v; break;
    case FieldKind::cyclotomic: e.cyc_[0] = v; break;
    case FieldKind::prime_field: {
      mpz_class r = v % mpz_class(s.p());
      if (r < 0) r += s.p();
      e.res_ = r.get_ui();
      break;
    }
  }
  return e;
}

FieldElem FieldElem::from_rational(const FieldSpec& s, const mpq_class& v) {
  mpq_class c = v;
  c.canonicalize();
  if (s.kind() == FieldKind::prime_field)
    return from_integer(s, c.get_num()) / from_integer(s, c.get_den());
  FieldElem e(s);
  if (s.kind() == FieldKind::rationals)
    e.rat_ = c;
  else
    e.cyc_[0] = c;
  return e;
}

FieldElem FieldElem::zeta(const FieldSpec& s) {
  if (s.kind() != FieldKind::cyclotomic)
    fail(errc::spec_mismatch, "zeta requested over " + s.to_string());
  FieldElem e(s);
  if (e.cyc_.size() == 1) {
    e.cyc_[0] = (s.n() == 1) ? 1 : -1; // phi(n)=1 only for n = 1, 2
  } else {
    e.cyc_[1] = 1;
  }
  return e;
}

FieldElem FieldElem::torsion_generator(const FieldSpec& s) {
  switch (s.kind()) {
    case FieldKind::rationals: return from_integer(s, -1);
    case FieldKind::cyclotomic: {
      FieldElem z = zeta(s);
      return (s.n() % 2 == 0) ? z : -z;
    }
    case FieldKind::prime_field: {
      return from_integer(s, (long)fp_generator(s.p()));
    }
  }
  fail(errc::internal, "unreachable");
}

FieldElem FieldElem::root_of_unity(const FieldSpec& s, unsigned long m) {
  if (m == 0) fail(errc::spec_mismatch, "root of unity of order 0");
  unsigned long M = s.torsion_order();
  if (M % m != 0)
    fail(errc::field_too_small, "no primitive " + std::to_string(m) +
                                     "-th root of unity in " + s.to_string());
  return torsion_generator(s).pow((long)(M / m));
}

bool FieldElem::is_zero() const {
  switch (spec_.kind()) {
    case FieldKind::rationals: return rat_ == 0;
    case FieldKind::cyclotomic:
      return std::all_of(cyc_.begin(), cyc_.end(), [](const mpq_class& c) { return c == 0; });
    case FieldKind::prime_field: return res_ == 0;
  }
  return false;
}

bool FieldElem::is_one() const {
  switch (spec_.kind()) {
    case FieldKind::rationals: return rat_ == 1;
    case FieldKind::cyclotomic: {
      if (cyc_[0] != 1) return false;
      for (std::size_t i = 1; i < cyc_.size(); ++i)
        if (cyc_[i] != 0) return false;
      return true;
    }
    case FieldKind::prime_field: return res_ == 1;
  }
  return false;
}

bool FieldElem::operator==(const FieldElem& o) const {
  if (spec_ != o.spec_) return false;
  switch (spec_.kind()) {
    case FieldKind::rationals: return rat_ == o.rat_;
    case FieldKind::cyclotomic: return cyc_ == o.cyc_;
    case FieldKind::prime_field: return res_ == o.res_;
  }
  return false;
}

static void require_same_spec(const FieldElem& a, const FieldElem& b) {
  if (a.spec() != b.spec())
    fail(errc::spec_mismatch, a.spec().to_string() + " vs " + b.spec().to_string());
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  switch (spec_.kind()) {
    case FieldKind::rationals: r.rat_ = -rat_; break;
    case FieldKind::cyclotomic:
      for (auto& c : r.cyc_) c = -c;
      break;
    case FieldKind::prime_field: r.res_ = res_ == 0 ? 0 : spec_.p() - res_; break;
  }
  return r;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  require_same_spec(a, b);
  FieldElem r = a;
  switch (a.spec_.kind()) {
    case FieldKind::rationals: r.rat_ += b.rat_; break;
    case FieldKind::cyclotomic:
      for (std::size_t i = 0; i < r.cyc_.size(); ++i) r.cyc_[i] += b.cyc_[i];
      break;
    case FieldKind::prime_field: r.res_ = (r.res_ + b.res_) % a.spec_.p(); break;
  }
  return r;
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  require_same_spec(a, b);
  FieldElem r = a;
  switch (a.spec_.kind()) {
    case FieldKind::rationals: r.rat_ *= b.rat_; break;
    case FieldKind::cyclotomic: {
      QPoly prod =
          qp_mul(QPoly(a.cyc_.begin(), a.cyc_.end()), QPoly(b.cyc_.begin(), b.cyc_.end()));
      r.cyc_ = reduce_cyclo(std::move(prod), a.spec_.n());
      break;
    }
    case FieldKind::prime_field: r.res_ = mulmod(a.res_, b.res_, a.spec_.p()); break;
  }
  return r;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) fail(errc::zero_element, "inverse of zero");
  FieldElem r = *this;
  switch (spec_.kind()) {
    case FieldKind::rationals: r.rat_ = 1 / rat_; break;
    case FieldKind::cyclotomic: {
      const ZPoly& phi = cyclo_poly(spec_.n());
      QPoly g, u;
      qp_half_ext_gcd(QPoly(cyc_.begin(), cyc_.end()), QPoly(phi.begin(), phi.end()), g, u);
      if (g.size() != 1) fail(errc::internal, "cyclotomic inverse: gcd not constant");
      r.cyc_ = reduce_cyclo(std::move(u), spec_.n());
      break;
    }
    case FieldKind::prime_field: r.res_ = invmod(res_, spec_.p()); break;
  }
  return r;
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

FieldElem FieldElem::pow(long e) const { return pow(mpz_class(e)); }

FieldElem FieldElem::pow(const mpz_class& e) const {
  if (e < 0) return inverse().pow(mpz_class(-e));
  FieldElem base = *this, acc = one(spec_);
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

std::optional<mpq_class> FieldElem::as_rational() const {
  switch (spec_.kind()) {
    case FieldKind::rationals: return rat_;
    case FieldKind::cyclotomic:
      for (std::size_t i = 1; i < cyc_.size(); ++i)
        if (cyc_[i] != 0) return std::nullopt;
      return cyc_[0];
    case FieldKind::prime_field: return std::nullopt;
  }
  return std::nullopt;
}

std::string FieldElem::to_string() const {
  switch (spec_.kind()) {
    case FieldKind::rationals: return rat_.get_str();
    case FieldKind::prime_field:
      return "F" + std::to_string(spec_.p()) + ":" + std::to_string(res_);
    case FieldKind::cyclotomic: break;
  }
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = cyc_.size(); k-- > 0;) {
    mpq_class a = cyc_[k];
    if (a == 0) continue;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (k == 0) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str() << "*";
      out << "zeta_" << spec_.n();
      if (k >= 2) out << "^" << k;
    }
  }
  return first ? "0" : out.str();
}

FieldElem galois_twist(const FieldElem& a, unsigned long k) {
  if (a.spec().kind() != FieldKind::cyclotomic) return a;
  unsigned long n = a.spec().n();
  unsigned long km = k % n;
  if (gcd_ul(km == 0 ? n : km, n) != 1)
    fail(errc::spec_mismatch, "galois twist exponent not coprime to n");
  FieldElem zk = FieldElem::zeta(a.spec()).pow((long)km);
  FieldElem acc = FieldElem::zero(a.spec());
  FieldElem cur = FieldElem::one(a.spec());
  for (std::size_t i = 0; i < a.coords().size(); ++i) {
    if (a.coords()[i] != 0)
      acc += FieldElem::from_rational(a.spec(), a.coords()[i]) * cur;
    if (i + 1 < a.coords().size()) cur *= zk;
  }
  return acc;
}

// ---- orders, relation lattices, roots ----------------------------------------

std::optional<unsigned long> multiplicative_order(const FieldElem& a) {
  if (a.is_zero()) fail(errc::zero_element, "order of zero");
  const FieldSpec& s = a.spec();
  switch (s.kind()) {
    case FieldKind::rationals: {
      if (a.rat() == 1) return 1;
      if (a.rat() == -1) return 2;
      return std::nullopt;
    }
    case FieldKind::cyclotomic: {
      for (unsigned long d : divisors_of(s.torsion_order()))
        if (a.pow((long)d).is_one()) return d;
      return std::nullopt;
    }
    case FieldKind::prime_field: {
      unsigned long t = s.p() - 1;
      for (auto& qe : factor_ul(s.p() - 1)) {
        while (t % qe.first == 0 && powmod(a.res(), t / qe.first, s.p()) == 1) t /= qe.first;
      }
      return t;
    }
  }
  return std::nullopt;
}

std::vector<std::pair<mpz_class, unsigned long>> factor_positive(const mpz_class& v) {
  if (v <= 0) fail(errc::spec_mismatch, "factor_positive needs v > 0");
  std::map<mpz_class, unsigned long> acc;
  mpz_class rem = v;
  for (unsigned long d = 2; d < (1ul << 20) && rem > 1; d += (d == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(rem.get_mpz_t(), d)) {
      unsigned long e = 0;
      while (mpz_divisible_ui_p(rem.get_mpz_t(), d)) {
        rem /= d;
        ++e;
      }
      acc[mpz_class(d)] += e;
    }
  }
  std::function<void(mpz_class)> crack = [&](mpz_class m) {
    if (m == 1) return;
    if (mpz_probab_prime_p(m.get_mpz_t(), 30)) {
      acc[m] += 1;
      return;
    }
    mpz_class c(1);
    while (true) {
      mpz_class x(2), y(2), d(1);
      while (d == 1) {
        x = (x * x + c) % m;
        y = (y * y + c) % m;
        y = (y * y + c) % m;
        mpz_class diff = abs(x - y);
        if (diff == 0) break;
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), m.get_mpz_t());
      }
      if (d != 1 && d != m) {
        crack(d);
        crack(m / d);
        return;
      }
      c += 1;
    }
  };
  if (rem > 1) crack(rem);
  return {acc.begin(), acc.end()};
}

std::optional<SplitUnit> split_rational_times_root(const FieldElem& a) {
  if (a.is_zero()) return std::nullopt;
  const FieldSpec& s = a.spec();
  switch (s.kind()) {
    case FieldKind::rationals: {
      SplitUnit u;
      u.rational = abs(a.rat());
      u.power = a.rat() < 0 ? 1 : 0;
      return u;
    }
    case FieldKind::prime_field: {
      SplitUnit u;
      u.rational = 1;
      u.power = fp_dlog(a.res(), fp_generator(s.p()), s.p());
      return u;
    }
    case FieldKind::cyclotomic: {
      FieldElem ginv = FieldElem::torsion_generator(s).inverse();
      FieldElem cur = a;
      for (unsigned long k = 0; k < s.torsion_order(); ++k) {
        if (auto q = cur.as_rational(); q && *q > 0) {
          SplitUnit u;
          u.rational = *q;
          u.power = k;
          return u;
        }
        cur = cur * ginv;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

namespace {

std::map<mpz_class, long> rational_exponents(const mpq_class& q) {
  std::map<mpz_class, long> e;
  for (auto& pk : factor_positive(q.get_num())) e[pk.first] += (long)pk.second;
  for (auto& pk : factor_positive(q.get_den())) e[pk.first] -= (long)pk.second;
  return e;
}

// { (s, t) : c1 s + c2 t = 0 mod m }
std::vector<std::array<mpz_class, 2>> congruence_lattice(const mpz_class& c1, const mpz_class& c2,
                                                         const mpz_class& m) {
  auto ker = integer_kernel({{c1, c2, m}});
  std::vector<std::array<mpz_class, 2>> rows;
  for (auto& v : ker) rows.push_back({v[0], v[1]});
  return rows;
}

RelationLattice normalize_lattice(const std::vector<std::array<mpz_class, 2>>& rows) {
  ZMat m;
  for (auto& r : rows) m.push_back({r[0], r[1]});
  RelationLattice out;
  for (auto& r : hermite_form(std::move(m))) out.basis.push_back({r[0], r[1]});
  return out;
}

} // namespace

RelationLattice relation_lattice(const FieldElem& a, const FieldElem& b) {
  if (a.is_zero() || b.is_zero()) fail(errc::zero_element, "relation lattice of zero");
  if (a.spec() != b.spec()) fail(errc::spec_mismatch, "relation lattice across fields");
  const FieldSpec& s = a.spec();
  mpz_class M(s.torsion_order());

  if (s.kind() == FieldKind::prime_field) {
    unsigned long g = fp_generator(s.p());
    return normalize_lattice(congruence_lattice(mpz_class(fp_dlog(a.res(), g, s.p())),
                                                mpz_class(fp_dlog(b.res(), g, s.p())), M));
  }

  auto sa = split_rational_times_root(a);
  auto sb = split_rational_times_root(b);
  if (!sa || !sb)
    fail(errc::unsupported_element,
         "relation lattice needs elements of the shape rational * root of unity");

  auto ea = rational_exponents(sa->rational);
  auto eb = rational_exponents(sb->rational);
  std::vector<mpz_class> primes;
  for (auto& pe : ea) primes.push_back(pe.first);
  for (auto& pe : eb)
    if (!ea.count(pe.first)) primes.push_back(pe.first);

  std::vector<std::vector<mpz_class>> free_basis;
  if (primes.empty()) {
    free_basis = {{mpz_class(1), mpz_class(0)}, {mpz_class(0), mpz_class(1)}};
  } else {
    ZMat rows;
    for (auto& p : primes)
      rows.push_back({mpz_class(ea.count(p) ? ea[p] : 0), mpz_class(eb.count(p) ? eb[p] : 0)});
    free_basis = integer_kernel(rows);
  }
  if (free_basis.empty()) return RelationLattice{};

  mpz_class ka(sa->power), kb(sb->power);
  std::vector<std::array<mpz_class, 2>> out_rows;
  if (free_basis.size() == 1) {
    mpz_class c = ka * free_basis[0][0] + kb * free_basis[0][1];
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
    mpz_class step = M / g;
    out_rows.push_back({step * free_basis[0][0], step * free_basis[0][1]});
  } else {
    mpz_class c1 = ka * free_basis[0][0] + kb * free_basis[0][1];
    mpz_class c2 = ka * free_basis[1][0] + kb * free_basis[1][1];
    for (auto& st : congruence_lattice(c1, c2, M))
      out_rows.push_back({st[0] * free_basis[0][0] + st[1] * free_basis[1][0],
                          st[0] * free_basis[0][1] + st[1] * free_basis[1][1]});
  }
  return normalize_lattice(out_rows);
}

std::optional<FieldElem> nth_root_in_field(const FieldElem& a, unsigned long d) {
  if (d == 0) fail(errc::spec_mismatch, "0-th root");
  if (d == 1 || a.is_zero()) return a;
  const FieldSpec& s = a.spec();
  switch (s.kind()) {
    case FieldKind::rationals: {
      mpq_class q = a.rat();
      bool neg = q < 0;
      if (neg && d % 2 == 0) return std::nullopt;
      mpq_class aq = abs(q);
      mpz_class rn, rd;
      if (!mpz_root(rn.get_mpz_t(), aq.get_num().get_mpz_t(), d)) return std::nullopt;
      if (!mpz_root(rd.get_mpz_t(), aq.get_den().get_mpz_t(), d)) return std::nullopt;
      mpq_class r(rn, rd);
      r.canonicalize();
      if (neg) r = -r;
      return FieldElem::from_rational(s, r);
    }
    case FieldKind::prime_field: {
      unsigned long p = s.p();
      unsigned long g = fp_generator(p);
      unsigned long t = fp_dlog(a.res(), g, p);
      unsigned long ord = p - 1;
      unsigned long dm = d % ord;
      unsigned long gg = gcd_ul(dm == 0 ? ord : dm, ord);
      if (t % gg) return std::nullopt;
      unsigned long ord2 = ord / gg;
      unsigned long z = ord2 == 1 ? 0 : mulmod((t / gg) % ord2, invmod((d / gg) % ord2, ord2), ord2);
      FieldElem r = FieldElem::from_integer(s, (long)powmod(g, z, p));
      if (r.pow((long)d) == a) return r;
      return std::nullopt;
    }
    case FieldKind::cyclotomic: {
      auto sp = split_rational_times_root(a);
      if (!sp) return std::nullopt;
      unsigned long M = s.torsion_order();
      mpz_class rn, rd;
      if (!mpz_root(rn.get_mpz_t(), sp->rational.get_num().get_mpz_t(), d)) return std::nullopt;
      if (!mpz_root(rd.get_mpz_t(), sp->rational.get_den().get_mpz_t(), d)) return std::nullopt;
      mpq_class base(rn, rd);
      base.canonicalize();
      FieldElem g = FieldElem::torsion_generator(s);
      for (unsigned long k = 0; k < M; ++k) {
        if (((k % M) * (d % M)) % M != sp->power % M) continue;
        FieldElem cand = FieldElem::from_rational(s, base) * g.pow((long)k);
        if (cand.pow((long)d) == a) return cand;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

} // namespace cremona
