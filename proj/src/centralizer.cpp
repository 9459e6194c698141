#include "cremona/centralizer.hpp"

#include <cstdlib>
#include <map>

namespace cremona {

RatMat RatMat::identity(const FieldSpec& s) {
  return {RatFunc::one(s), RatFunc::zero(s), RatFunc::zero(s), RatFunc::one(s)};
}

RatMat RatMat::inverse() const {
  RatFunc dt = det();
  if (dt.is_zero()) fail(errc::zero_element, "singular matrix over K(x)");
  return {d / dt, -(b / dt), -(c / dt), a / dt};
}

RatMat operator*(const RatMat& l, const RatMat& r) {
  return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c,
          l.c * r.b + l.d * r.d};
}

std::string RatMat::to_string() const {
  return "[[" + a.to_string() + ", " + b.to_string() + "], [" + c.to_string() + ", " +
         d.to_string() + "]]";
}

RatFunc delta(const JonqMap& f) {
  if (!f.is_fiberwise()) fail(errc::not_fiberwise, "Delta reads the fiber matrix of a Jonq_0 element");
  return delta_of(f);
}

bool is_elliptic_fiberwise(const JonqMap& f) { return delta(f).is_constant(); }

namespace {

// m with gamma^m = t, decided through the relation lattice of the pair;
// gamma must have infinite order
std::optional<long> power_index(const FieldElem& gamma, const FieldElem& t) {
  if (t.is_one()) return 0;
  RelationLattice L = relation_lattice(gamma, t);
  if (L.rank() != 1) return std::nullopt;
  const mpz_class& u = L.basis[0][0];
  const mpz_class& v = L.basis[0][1];
  if (v != 1 && v != -1) return std::nullopt;
  mpz_class m = v < 0 ? u : mpz_class(-u);
  if (!m.fits_slong_p()) return std::nullopt;
  long k = m.get_si();
  if (gamma.pow(k) != t) return std::nullopt;
  return k;
}

// monic squarefree factors of num and den with signed multiplicities
std::vector<std::pair<Poly, long>> signed_factors(const RatFunc& f) {
  std::vector<std::pair<Poly, long>> out;
  if (!f.num().is_constant())
    for (auto& [p, m] : squarefree_decomposition(f.num().monic())) out.emplace_back(p, (long)m);
  if (!f.den().is_constant())
    for (auto& [p, m] : squarefree_decomposition(f.den().monic())) out.emplace_back(p, -(long)m);
  return out;
}

// Group the factors into sigma-orbit chains and build S from the partial
// sums of the exponents; every chain must sum to zero.
template <class Offset, class Shift>
RatFunc chain_split(const FieldSpec& s, const std::vector<std::pair<Poly, long>>& factors,
                    Offset&& offset, Shift&& shift) {
  struct Chain {
    Poly rep;
    std::map<long, long> exp;
  };
  // A squarefree factor can still straddle several orbits, for instance
  // (x + 2)(x + 2/3) under x -> 2x, and then no full-factor match exists
  // even though R telescopes.  Cut such factors apart with gcds against
  // shifted copies; splits at distance beyond the degree budget are not
  // needed because the witness they would produce is over budget anyway.
  std::vector<std::pair<Poly, long>> fs(factors);
  bool cut = true;
  while (cut) {
    cut = false;
    for (std::size_t a = 0; a < fs.size() && !cut; ++a) {
      if (fs[a].first.degree() < 2) continue;
      for (std::size_t b = 0; b < fs.size() && !cut; ++b)
        for (long jj = 1; jj <= 512 && !cut; ++jj)
          for (long j : {jj, -jj}) {
            Poly g = gcd(fs[a].first, shift(fs[b].first, j));
            if (g.degree() <= 0 || g.degree() == fs[a].first.degree()) continue;
            Poly rest = fs[a].first / g;
            long e = fs[a].second;
            fs[a] = {g, e};
            fs.emplace_back(rest.monic(), e);
            cut = true;
            break;
          }
    }
  }
  std::vector<Chain> chains;
  for (auto& [q, e] : fs) {
    bool placed = false;
    for (auto& ch : chains)
      if (auto m = offset(ch.rep, q)) {
        ch.exp[*m] += e;
        placed = true;
        break;
      }
    if (!placed) chains.push_back({q, {{0, e}}});
  }
  RatFunc S = RatFunc::one(s);
  long budget = 512;
  for (auto& ch : chains) {
    long total = 0;
    for (auto& [m, e] : ch.exp) total += e;
    if (total != 0)
      fail(errc::not_elliptic, "the zero/pole orbit of " + ch.rep.to_string() +
                                   " has total order " + std::to_string(total) +
                                   ", so it cannot telescope");
    long run = 0;
    long last = ch.exp.rbegin()->first;
    auto it = ch.exp.begin();
    for (long pos = it->first; pos < last; ++pos) {
      while (it != ch.exp.end() && it->first <= pos) run += (it++)->second;
      if (run == 0) continue;
      budget -= ch.rep.degree() * std::abs(run);
      if (budget < 0)
        fail(errc::degree_budget_exceeded, "telescoping witness degree passed the working budget");
      S = S * RatFunc::from_poly(shift(ch.rep, pos)).pow(run);
    }
  }
  return S;
}

struct ModelSplit {
  FieldElem r;
  RatFunc S;
};

// base x -> alpha x with alpha of infinite order; fixed places 0 and infinity
ModelSplit split_scaling_orbits(const FieldElem& alpha, const RatFunc& R) {
  const FieldSpec& s = R.spec();
  if (R.val_at_zero() != 0)
    fail(errc::not_elliptic, "order " + std::to_string(R.val_at_zero()) +
                                 " at the fixed point x = 0 cannot telescope");
  if (R.num().degree() != R.den().degree())
    fail(errc::not_elliptic, "order " + std::to_string(R.den().degree() - R.num().degree()) +
                                 " at the fixed point x = infinity cannot telescope");
  auto offset = [&](const Poly& base, const Poly& q) -> std::optional<long> {
    if (base.degree() != q.degree()) return std::nullopt;
    FieldElem gamma = alpha.pow(-base.degree());
    auto m = power_index(gamma, q.constant_term() / base.constant_term());
    if (!m) return std::nullopt;
    if (base.scale_arg(alpha.pow(*m)).monic() != q) return std::nullopt;
    return m;
  };
  auto shift = [&](const Poly& base, long m) { return base.scale_arg(alpha.pow(m)).monic(); };
  RatFunc S = chain_split(s, signed_factors(R), offset, shift);
  RatFunc res = R * S.substitute(RatFunc::from_poly(Poly::monomial(alpha, 1))) / S;
  auto r = res.as_constant();
  if (!r) fail(errc::internal, "scaling-orbit telescope left a nonconstant residue");
  return {*r, S};
}

// base x -> x + 1; the only fixed place is infinity
ModelSplit split_shift_orbits(const RatFunc& R) {
  const FieldSpec& s = R.spec();
  if (R.num().degree() != R.den().degree())
    fail(errc::not_elliptic, "order " + std::to_string(R.den().degree() - R.num().degree()) +
                                 " at the fixed point x = infinity cannot telescope");
  auto translate = [&](const Poly& p, long m) {
    Poly inner = Poly::from_coeffs(s, {FieldElem::from_integer(s, m), FieldElem::one(s)});
    return p.compose(inner);
  };
  auto offset = [&](const Poly& base, const Poly& q) -> std::optional<long> {
    long d = base.degree();
    if (d != q.degree()) return std::nullopt;
    // x -> x + m moves the subleading coefficient by m*d
    FieldElem diff = (q.coeff((std::size_t)(d - 1)) - base.coeff((std::size_t)(d - 1))) /
                     FieldElem::from_integer(s, d);
    auto rc = diff.as_rational();
    if (!rc || rc->get_den() != 1 || !rc->get_num().fits_slong_p()) return std::nullopt;
    long m = rc->get_num().get_si();
    if (translate(base, m) != q) return std::nullopt;
    return m;
  };
  RatFunc S = chain_split(s, signed_factors(R), offset, translate);
  Poly xp1 = Poly::from_coeffs(s, {FieldElem::one(s), FieldElem::one(s)});
  RatFunc res = R * S.substitute(RatFunc::from_poly(xp1)) / S;
  auto r = res.as_constant();
  if (!r) fail(errc::internal, "shift-orbit telescope left a nonconstant residue");
  return {*r, S};
}

} // namespace

TelescopeDecomposition telescope_split(const MobiusK& eta, const RatFunc& R) {
  if (eta.spec() != R.spec()) fail(errc::spec_mismatch, "base and multiplier over different fields");
  if (eta.spec().characteristic() != 0)
    fail(errc::char_p_unsupported, "norm splitting relies on characteristic zero");
  if (R.is_zero()) fail(errc::zero_element, "the multiplier must be a unit of K(x)");
  const FieldSpec& s = R.spec();
  FieldElem r(s);
  RatFunc S = RatFunc::one(s);
  if (auto d = projective_order(eta)) {
    // orbit norm first, then a resolvent sum against the normalized cocycle
    RatFunc T = R;
    MobiusK pw = eta;
    for (unsigned long i = 1; i < *d; ++i) {
      T = T * R.substitute(pw.as_ratfunc());
      pw = eta.compose(pw);
    }
    auto t = T.as_constant();
    if (!t) fail(errc::not_elliptic, "the orbit norm " + T.to_string() + " is nonconstant");
    auto root = nth_root_in_field(*t, *d);
    if (!root)
      fail(errc::root_not_in_field,
           "the orbit norm " + t->to_string() + " has no " + std::to_string(*d) +
               "-th root here; needs an extension of degree " + std::to_string(*d));
    r = *root;
    RatFunc Rn = R / RatFunc::constant(r);
    bool found = false;
    for (unsigned long te = 0; te <= 2 * *d && !found; ++te) {
      RatFunc acc = RatFunc::zero(s);
      RatFunc coc = RatFunc::one(s);
      MobiusK at = MobiusK::identity(s);
      for (unsigned long i = 0; i < *d; ++i) {
        acc += coc * at.as_ratfunc().pow((long)te);
        coc = coc * Rn.substitute(at.as_ratfunc());
        at = eta.compose(at);
      }
      if (!acc.is_zero()) {
        S = acc;
        found = true;
      }
    }
    if (!found)
      fail(errc::internal, "the resolvent vanished for every monomial up to degree 2d");
  } else {
    BaseOrderReport rep = base_order_report(eta);
    if (!rep.coordinate)
      fail(errc::unresolved_fixed_points,
           "the base fixed points lie outside K; pass coordinates where eta is alpha x or x + 1");
    MobiusK psi = *rep.coordinate;
    RatFunc Rm = R.substitute(psi.as_ratfunc());
    ModelSplit ms = rep.kind == BaseOrderReport::Kind::infinite_multiplicative
                        ? split_scaling_orbits(*rep.multiplier, Rm)
                        : split_shift_orbits(Rm);
    r = ms.r;
    S = ms.S.substitute(psi.inverse().as_ratfunc());
  }
  if (R * S.substitute(eta.as_ratfunc()) != RatFunc::constant(r) * S)
    fail(errc::internal, "telescope certificate failed the final recheck");
  return {r, S, true};
}

AdditiveTelescope additive_telescope_split(const MobiusK& eta, const RatFunc& R) {
  if (eta.spec() != R.spec()) fail(errc::spec_mismatch, "base and summand over different fields");
  auto ord = projective_order(eta);
  if (!ord) fail(errc::unsupported_element, "the additive trace needs a base of finite order");
  const FieldSpec& s = R.spec();
  unsigned long d = *ord;
  unsigned long p = s.characteristic();
  if (p != 0 && d % p == 0)
    fail(errc::unsupported_characteristic, "the base order " + std::to_string(d) +
                                               " is not invertible in characteristic " +
                                               std::to_string(p));
  RatFunc trace = R;
  RatFunc partial = R;
  RatFunc sums = d >= 2 ? R : RatFunc::zero(s);
  MobiusK pw = eta;
  for (unsigned long i = 1; i < d; ++i) {
    RatFunc Ri = R.substitute(pw.as_ratfunc());
    trace += Ri;
    partial += Ri;
    if (i + 2 <= d) sums += partial;
    pw = eta.compose(pw);
  }
  auto c = trace.as_constant();
  if (!c) fail(errc::not_splittable, "the orbit trace " + trace.to_string() + " is nonconstant");
  FieldElem dinv = FieldElem::from_integer(s, (long)d).inverse();
  RatFunc S = RatFunc::constant(-dinv) * sums;
  if (S.substitute(eta.as_ratfunc()) - S + RatFunc::constant(*c * dinv) != R)
    fail(errc::internal, "additive telescope certificate failed the recheck");
  return {*c, S, true};
}

EllipticVerdict is_elliptic(const JonqMap& f) {
  if (auto ord = projective_order(f.base())) {
    RatFunc d = delta_of(f.pow((long)*ord));
    bool e = d.is_constant();
    return {e, true,
            "Delta of the fiberwise power f^" + std::to_string(*ord) +
                (e ? " is constant" : " = " + d.to_string() + " is nonconstant")};
  }
  const PolyMat& M = f.mat();
  if (M.b.is_zero() && M.c.is_zero()) {
    try {
      TelescopeDecomposition t = telescope_split(f.base(), RatFunc(M.a, M.d));
      return {true, true, "multiplier splits as r S / (S o eta) with r = " + t.r.to_string()};
    } catch (const calc_error& e) {
      if (e.code() == errc::not_elliptic) return {false, true, e.what()};
      // unresolved fixed points or undecidable scalars: no exact route left
    }
  } else if (M.c.is_zero() && M.a == M.d) {
    BaseOrderReport rep = base_order_report(f.base());
    if (rep.coordinate) {
      RatFunc Rm = RatFunc(M.b, M.a).substitute(rep.coordinate->as_ratfunc());
      const Poly& den = Rm.den();
      bool ok = rep.kind == BaseOrderReport::Kind::infinite_multiplicative
                    ? den.valuation_at_zero() == (unsigned long)den.degree()
                    : den.is_constant();
      return {ok, true,
              ok ? "translation part has poles only over base fixed points"
                 : "translation part has a pole on a wandering base orbit"};
    }
  }
  GrowthClassification g = classify_map_growth(jonq_to_cremona(f), 24);
  return {g.type == GrowthType::elliptic, false,
          "degree-sequence fallback: " + growth_name(g.type) + " (" + g.note + ")"};
}

Diagonalization diagonalize_over_kx(const JonqMap& f) {
  if (!f.is_fiberwise())
    fail(errc::not_fiberwise, "diagonalization reads the fiber matrix of a Jonq_0 element");
  const FieldSpec& s = f.spec();
  RatFunc A = RatFunc::from_poly(f.mat().a), B = RatFunc::from_poly(f.mat().b),
          C = RatFunc::from_poly(f.mat().c), D = RatFunc::from_poly(f.mat().d);
  RatMat id = RatMat::identity(s);
  if (B.is_zero() && C.is_zero()) {
    if (A == D) return {Diagonalization::Kind::scalar, A, A, id};
    return {Diagonalization::Kind::split, A, D, id};
  }
  if (s.characteristic() == 2)
    fail(errc::char2_nonsplit, "the quadratic normal form needs 2 invertible");
  RatFunc disc = (A - D) * (A - D) + RatFunc::constant(FieldElem::from_integer(s, 4)) * B * C;
  RatFunc half = RatFunc::constant(FieldElem::from_integer(s, 2).inverse());
  SquareRoot sq = ratfunc_square_root(disc);
  if (sq.verdict == Ternary::undecided)
    fail(errc::undecided_square, "cannot decide whether " + disc.to_string() + " is a square in K(x)");
  if (sq.verdict == Ternary::yes && !disc.is_zero()) {
    RatFunc W = *sq.root;
    RatFunc l1 = (A + D + W) * half, l2 = (A + D - W) * half;
    RatMat P = !B.is_zero() ? RatMat{B, B, l1 - A, l2 - A} : RatMat{l1 - D, l2 - D, C, C};
    RatMat N = P.inverse() * RatMat{A, B, C, D} * P;
    if (!N.b.is_zero() || !N.c.is_zero() || N.a != l1 || N.d != l2)
      fail(errc::internal, "eigenvector conjugation failed the recheck");
    return {Diagonalization::Kind::split, l1, l2, P};
  }
  // lower-left entry scaled to 1, then the diagonal equalized; when C = 0 the
  // matrix is unipotent here, so swap the triangle first
  RatMat P = !C.is_zero()
                 ? RatMat{C.inverse(), (A - D) * half / C, RatFunc::zero(s), RatFunc::one(s)}
                 : RatMat{RatFunc::zero(s), RatFunc::one(s), B.inverse(), RatFunc::zero(s)};
  RatMat N = P.inverse() * RatMat{A, B, C, D} * P;
  if (N.c != RatFunc::one(s) || N.a != N.d || N.b != disc * half * half)
    fail(errc::internal, "triangular normalization failed the recheck");
  return {Diagonalization::Kind::non_split, N.a, N.b, P};
}

InvolutionCurve involution_curve(const JonqMap& f) {
  if (!f.is_fiberwise()) fail(errc::not_fiberwise, "involutions are read off in Jonq_0");
  const PolyMat& M = f.mat();
  if (!M.a.is_zero() || !M.d.is_zero() || M.b.is_zero() || M.c.is_zero())
    fail(errc::not_involution_form, "fiber matrix is not anti-diagonal");
  RatFunc a(M.b, M.c);
  if (!f.compose(f).is_identity())
    fail(errc::internal, "anti-diagonal fiber failed the order-two recheck");
  Poly prod = (a.num() * a.den()).monic();
  Poly curve = Poly::constant(FieldElem::one(f.spec()));
  if (!prod.is_constant())
    for (auto& [p, m] : squarefree_decomposition(prod))
      if (m % 2 == 1) curve = curve * p;
  return {a, curve};
}

EllipticNormalForm EllipticNormalForm::diagonal(const FieldElem& alpha, const FieldElem& beta) {
  if (alpha.is_zero() || beta.is_zero()) fail(errc::zero_element, "diagonal form needs units");
  EllipticNormalForm out{Kind::diagonal_kk, alpha, beta, {}, std::nullopt};
  out.lattice = relation_lattice(alpha, beta);
  if (out.lattice.rank() == 0)
    out.k = 0;
  else if (out.lattice.rank() == 1 && out.lattice.basis[0][1] == 0 &&
           out.lattice.basis[0][0].fits_ulong_p())
    out.k = out.lattice.basis[0][0].get_ui();
  return out;
}

EllipticNormalForm EllipticNormalForm::affine_translation(const FieldElem& alpha) {
  if (alpha.is_zero()) fail(errc::zero_element, "the base multiplier must be a unit");
  return {Kind::affine_translation, alpha, FieldElem::one(alpha.spec()), {}, std::nullopt};
}

EllipticNormalForm EllipticNormalForm::fiber_diagonal(const FieldElem& beta) {
  if (beta.is_zero()) fail(errc::zero_element, "the fiber multiplier must be a unit");
  return {Kind::fiber_diagonal, FieldElem::one(beta.spec()), beta, {}, std::nullopt};
}

EllipticNormalForm EllipticNormalForm::fiber_translation(const FieldSpec& s) {
  return {Kind::fiber_translation, FieldElem::one(s), FieldElem::one(s), {}, std::nullopt};
}

JonqMap EllipticNormalForm::model() const {
  const FieldSpec& s = spec();
  switch (kind) {
    case Kind::diagonal_kk:
      return JonqMap::diagonal(MobiusK::scaling(alpha), RatFunc::constant(beta));
    case Kind::affine_translation:
      return JonqMap::translation_y(MobiusK::scaling(alpha), RatFunc::one(s));
    case Kind::fiber_diagonal:
      return JonqMap::diagonal(MobiusK::identity(s), RatFunc::constant(beta));
    case Kind::fiber_translation:
      return JonqMap::translation_y(MobiusK::identity(s), RatFunc::one(s));
  }
  fail(errc::internal, "unhandled normal form kind");
}

std::string EllipticNormalForm::to_string() const {
  switch (kind) {
    case Kind::diagonal_kk:
      return "DiagonalKK(alpha = " + alpha.to_string() + ", beta = " + beta.to_string() +
             ", k = " + (k ? std::to_string(*k) : "none") + ")";
    case Kind::affine_translation:
      return "AffineTranslation(alpha = " + alpha.to_string() + ")";
    case Kind::fiber_diagonal:
      return "FiberDiagonal(beta = " + beta.to_string() + ")";
    case Kind::fiber_translation:
      return "FiberTranslation";
  }
  return "";
}

EllipticNormalForm elliptic_normal_form_recognize(const JonqMap& f) {
  EllipticVerdict v = is_elliptic(f);
  if (!v.elliptic) fail(errc::not_elliptic, v.method);
  const FieldSpec& s = f.spec();
  const MobiusK& b = f.base();
  if (!b.b().is_zero() || !b.c().is_zero())
    fail(errc::not_recognized, "base action is not x -> alpha x; conjugation search is out of scope");
  FieldElem alpha = b.a() / b.d();
  const PolyMat& M = f.mat();
  if (M.b.is_zero() && M.c.is_zero()) {
    auto beta = RatFunc(M.a, M.d).as_constant();
    if (!beta)
      fail(errc::not_recognized, "diagonal multiplier depends on x; telescope_split builds the conjugator");
    return alpha.is_one() ? EllipticNormalForm::fiber_diagonal(*beta)
                          : EllipticNormalForm::diagonal(alpha, *beta);
  }
  if (M.c.is_zero() && M.a == M.d) {
    auto c = RatFunc(M.b, M.a).as_constant();
    if (!c) fail(errc::not_recognized, "translation part depends on x; needs a fiberwise conjugation first");
    if (alpha.is_one()) return EllipticNormalForm::fiber_translation(s);
    if (s.characteristic() != 0 && multiplicative_order(alpha))
      fail(errc::not_recognized,
           "the translation form needs an infinite-order multiplier in characteristic p");
    return EllipticNormalForm::affine_translation(alpha);
  }
  fail(errc::not_recognized, "fiber matrix is neither diagonal nor a translation");
}

MembershipVerdict cent_membership(const EllipticNormalForm& form, const JonqMap& g) {
  if (form.spec() != g.spec())
    fail(errc::chart_mismatch, "normal form over " + form.spec().to_string() +
                                   ", candidate over " + g.spec().to_string());
  const FieldSpec& s = g.spec();
  const PolyMat& M = g.mat();
  bool diag = M.b.is_zero() && M.c.is_zero();
  bool translation_shape = M.c.is_zero() && M.a == M.d;
  switch (form.kind) {
    case EllipticNormalForm::Kind::fiber_diagonal:
      if (diag) return {true, "g = (eta(x), y R(x)) commutes with every (x, beta y)"};
      return {false, "fiber matrix is not diagonal"};
    case EllipticNormalForm::Kind::fiber_translation:
      if (translation_shape) return {true, "g = (eta(x), y + R(x)) commutes with every (x, y + c)"};
      return {false, "fiber is not of the form y + R(x)"};
    case EllipticNormalForm::Kind::diagonal_kk: {
      if (!form.k)
        fail(errc::unsupported_element,
             "the relation lattice of (alpha, beta) is not generated by a vector (k, 0); "
             "renormalize the pair first");
      if (!diag) return {false, "fiber matrix is not diagonal"};
      MobiusK scale = MobiusK::scaling(form.alpha);
      if (g.base().compose(scale) != scale.compose(g.base()))
        return {false, "base part does not commute with x -> alpha x"};
      RatFunc R(M.a, M.d);
      unsigned long k = *form.k;
      if (k == 0) {
        if (!R.is_constant())
          return {false, "a trivial relation lattice forces a constant multiplier"};
        return {true, "g = (eta(x), c y) with eta(alpha x) = alpha eta(x)"};
      }
      FieldElem zk = FieldElem::root_of_unity(s, k);
      if (R.substitute(RatFunc::from_poly(Poly::monomial(zk, 1))) != R)
        return {false, "multiplier is not a function of x^" + std::to_string(k)};
      return {true, "g = (eta(x), y R(x^" + std::to_string(k) + ")) with eta(alpha x) = alpha eta(x)"};
    }
    case EllipticNormalForm::Kind::affine_translation: {
      if (s.characteristic() == 0) {
        if (!translation_shape) return {false, "fiber is not of the form y + R(x)"};
        MobiusK scale = MobiusK::scaling(form.alpha);
        if (g.base().compose(scale) != scale.compose(g.base()))
          return {false, "base part does not commute with x -> alpha x"};
        RatFunc R(M.b, M.a);
        if (R.substitute(RatFunc::from_poly(Poly::monomial(form.alpha, 1))) != R)
          return {false, "translation part is not invariant under x -> alpha x"};
        return {true, "g = (eta(x), y + R(x)) with R(alpha x) = R(x)"};
      }
      // characteristic p: g is read in the y-fibration chart as (R(y) x, y + t)
      const MobiusK& b = g.base();
      if (!b.c().is_zero() || b.a() != b.d()) return {false, "y-part is not a translation y + t"};
      if (!diag) return {false, "x-multiplier is not of the form R(y) x"};
      RatFunc R(M.a, M.d);
      Poly yp1 = Poly::from_coeffs(s, {FieldElem::one(s), FieldElem::one(s)});
      if (R.substitute(RatFunc::from_poly(yp1)) != R) return {false, "R(y + 1) = R(y) fails"};
      return {true, "g = (R(y) x, y + t) with R(y + 1) = R(y), read in the y-fibration chart"};
    }
  }
  fail(errc::internal, "unhandled normal form kind");
}

Cent0Structure cent0_structure(const JonqMap& f) {
  if (auto ord = projective_order(f.base()))
    fail(errc::not_base_wandering, "base action has finite order " + std::to_string(*ord));
  const FieldSpec& s = f.spec();
  const PolyMat& M = f.mat();
  MobiusK idb = MobiusK::identity(s);
  if (M.b.is_zero() && M.c.is_zero()) {
    FieldElem t = FieldElem::from_integer(s, 2);
    if (t.is_zero()) t = FieldElem::one(s);
    return {Cent0Structure::Kind::multiplicative_flow, JonqMap::diagonal(idb, RatFunc::constant(t)),
            "fiber-preserving centralizer part {(x, t y) : t in K*}"};
  }
  if (M.a.is_zero() && M.d.is_zero())
    return {Cent0Structure::Kind::order_two,
            JonqMap::diagonal(idb, RatFunc::constant(-FieldElem::one(s))),
            "fiber-preserving centralizer part generated by (x, -y)"};
  if (M.c.is_zero() && M.a == M.d)
    return {Cent0Structure::Kind::additive_flow, JonqMap::translation_y(idb, RatFunc::one(s)),
            "fiber-preserving centralizer part {(x, y + t) : t in K}"};
  return {Cent0Structure::Kind::torsion_or_trivial, std::nullopt,
          "no flow shape matched; the fiber-preserving part is at most torsion"};
}

} // namespace cremona
