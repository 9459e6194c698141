#include "cremona/formal.hpp"

#include <sstream>
#include <tuple>

namespace cremona {

LocalModel LocalModel::make(const FieldElem& alpha, const Poly& A, const Poly& B, const Poly& C,
                            const Poly& D, long N) {
  const FieldSpec& s = alpha.spec();
  if (A.spec() != s || B.spec() != s || C.spec() != s || D.spec() != s)
    fail(errc::spec_mismatch, "local model parts live in different fields");
  if (N < 1) fail(errc::spec_mismatch, "truncation order must be at least 1");
  if (A.coeff(0).is_zero() || !B.coeff(0).is_zero() || !C.coeff(0).is_zero() ||
      !D.coeff(0).is_zero())
    fail(errc::spec_mismatch,
         "local model needs A(0) != 0 and B(0) = C(0) = D(0) = 0; move the "
         "distinguished indeterminacy point to (0, 0) first");
  if ((A * D - B * C).is_zero()) fail(errc::zero_element, "the fiber matrix is singular");
  if (alpha.is_zero()) fail(errc::zero_element, "base multiplier is 0");
  if (auto k = multiplicative_order(alpha))
    fail(errc::unsupported_element, "base multiplier has finite order " + std::to_string(*k) +
                                        "; the coefficient recurrence needs infinite order");
  return LocalModel{alpha, A, B, C, D, N};
}

std::string FormalConjugation::to_string() const {
  std::ostringstream out;
  out << "valuation: " << beta.val << "\n";
  out << "beta: " << beta.to_string() << "\n";
  out << "E: " << E.to_string() << "\n";
  out << "F: " << F.to_string() << "\n";
  out << "G: " << G.to_string() << "\n";
  out << "H: " << H.to_string() << "\n";
  out << "residual order: " << residual_order << "\n";
  return out.str();
}

FormalConjugation solve_efgh(const LocalModel& m, PinOrder order) {
  const FieldSpec& s = m.alpha.spec();
  unsigned long N = (unsigned long)m.N;
  TruncSeries As = TruncSeries::from_poly(m.A, N);
  TruncSeries Bs = TruncSeries::from_poly(m.B, N);
  TruncSeries Cs = TruncSeries::from_poly(m.C, N);
  TruncSeries Ds = TruncSeries::from_poly(m.D, N);
  TruncSeries E(s, N), F(s, N), G(s, N), H(s, N);
  E.set_coeff(0, FieldElem::one(s));
  H.set_coeff(0, FieldElem::one(s));

  // up-right entry of adj(P(alpha x)) M(x) P(x); involves only F and H
  auto eq1 = [&](const TruncSeries& Fv, const TruncSeries& Hv) {
    TruncSeries Fa = Fv.scale_arg(m.alpha), Ha = Hv.scale_arg(m.alpha);
    return Fv * Ha * As + Hv * Ha * Bs - Fv * Fa * Cs - Hv * Fa * Ds;
  };
  // down-left entry; involves only E and G
  auto eq2 = [&](const TruncSeries& Ev, const TruncSeries& Gv) {
    TruncSeries Ea = Ev.scale_arg(m.alpha), Ga = Gv.scale_arg(m.alpha);
    return Ev * Ea * Cs + Gv * Ea * Ds - Ev * Ga * As - Gv * Ga * Bs;
  };

  // r + c1 u1 + c2 u2 = 0, solved for the first unknown whose coefficient
  // is nonzero; the other is pinned to 0
  auto lin_solve = [&](std::size_t i, const FieldElem& r, const FieldElem& c1,
                       const FieldElem& c2) -> std::pair<FieldElem, FieldElem> {
    FieldElem zero = FieldElem::zero(s);
    if (!c1.is_zero()) return {-(r / c1), zero};
    if (!c2.is_zero()) return {zero, -(r / c2)};
    if (!r.is_zero())
      fail(errc::degenerate_step, "coefficient step " + std::to_string(i) +
                                      " has no solution; the model violates its preconditions");
    return {zero, zero};
  };

  FieldElem one = FieldElem::one(s);
  for (std::size_t i = 1; i <= N; ++i) {
    // the x^i coefficient of each equation is linear in the index-i
    // unknowns (their product only shows up at x^(2i)), so unit probes
    // read off the linear form exactly
    {
      FieldElem r = eq1(F, H).coeff(i);
      TruncSeries Fp = F, Hp = H;
      Fp.set_coeff(i, one);
      Hp.set_coeff(i, one);
      FieldElem cf = eq1(Fp, H).coeff(i) - r;
      FieldElem ch = eq1(F, Hp).coeff(i) - r;
      FieldElem fv = FieldElem::zero(s), hv = FieldElem::zero(s);
      if (order == PinOrder::gauge_last)
        std::tie(fv, hv) = lin_solve(i, r, cf, ch);
      else
        std::tie(hv, fv) = lin_solve(i, r, ch, cf);
      F.set_coeff(i, fv);
      H.set_coeff(i, hv);
    }
    {
      FieldElem r = eq2(E, G).coeff(i);
      TruncSeries Ep = E, Gp = G;
      Ep.set_coeff(i, one);
      Gp.set_coeff(i, one);
      FieldElem cg = eq2(E, Gp).coeff(i) - r;
      FieldElem ce = eq2(Ep, G).coeff(i) - r;
      FieldElem gv = FieldElem::zero(s), ev = FieldElem::zero(s);
      if (order == PinOrder::gauge_last)
        std::tie(gv, ev) = lin_solve(i, r, cg, ce);
      else
        std::tie(ev, gv) = lin_solve(i, r, ce, cg);
      G.set_coeff(i, gv);
      E.set_coeff(i, ev);
    }
  }

  // certificate: rebuild adj(P(alpha x)) M(x) P(x) from the final series
  // and insist the off-diagonal entries vanish to the working order
  TruncSeries Ea = E.scale_arg(m.alpha), Fa = F.scale_arg(m.alpha);
  TruncSeries Ga = G.scale_arg(m.alpha), Ha = H.scale_arg(m.alpha);
  TruncSeries n00 = As * E + Bs * G, n01 = As * F + Bs * H;
  TruncSeries n10 = Cs * E + Ds * G, n11 = Cs * F + Ds * H;
  TruncSeries t01 = Ha * n01 - Fa * n11;
  TruncSeries t10 = Ea * n10 - Ga * n00;
  if (!t01.is_zero() || !t10.is_zero())
    fail(errc::internal, "off-diagonal residual survived the coefficient solve");
  TruncSeries t00 = Ha * n00 - Fa * n10;
  TruncSeries t11 = Ea * n11 - Ga * n01;
  if (t11.is_zero())
    fail(errc::degenerate_step,
         "the fiber determinant vanishes beyond the truncation order; raise N");
  LaurentSeries beta = laurent_div(t00, t11);
  return FormalConjugation{E, F, G, H, beta, (long)N};
}

namespace {

// theta as x^val * unit, losing val orders of precision; nullopt when theta
// vanishes to its full precision
std::optional<LaurentSeries> as_laurent(const TruncSeries& t) {
  unsigned long v = t.valuation();
  if (v > t.order()) return std::nullopt;
  TruncSeries u(t.spec(), t.order() - v);
  for (std::size_t i = 0; i + v <= t.order(); ++i) u.set_coeff(i, t.coeff(i + v));
  return LaurentSeries{(long)v, u};
}

} // namespace

bool fixed_formal_section_check(const FieldElem& alpha, const LaurentSeries& beta,
                                const TruncSeries& theta, long N) {
  if (alpha.is_zero()) fail(errc::zero_element, "base multiplier is 0");
  auto tL = as_laurent(theta);
  if (!tL) return true; // 0 is fixed by every diagonal form
  FieldElem ai = alpha.inverse();
  LaurentSeries lhs = laurent_mul(beta.scale_arg(ai), tL->scale_arg(ai));
  long hi = lhs.val + (long)lhs.unit.order();
  for (long k = std::min(lhs.val, 0L); k <= N; ++k) {
    // a mismatch can be visible well before the precision runs out, so
    // only insist on precision for coefficients we actually reach
    if (k > hi || k > (long)theta.order())
      fail(errc::spec_mismatch, "truncation order too small for the requested check");
    FieldElem t = k < 0 ? FieldElem::zero(theta.spec()) : theta.coeff((std::size_t)k);
    if (lhs.coeff(k) != t) return false;
  }
  return true;
}

bool fixed_formal_section_check(const FieldElem& alpha, const TruncSeries& beta,
                                const TruncSeries& theta, long N) {
  auto bL = as_laurent(beta);
  if (!bL) {
    // beta is 0 to its precision, so the image of theta is 0
    for (long k = 0; k <= N && k <= (long)theta.order(); ++k)
      if (!theta.coeff((std::size_t)k).is_zero()) return false;
    return true;
  }
  return fixed_formal_section_check(alpha, *bL, theta, N);
}

bool diagonal_commutant_check(const FieldElem& alpha, const TruncSeries& beta,
                              const FieldElem& gamma, const FieldElem& delta, long N) {
  (void)alpha;
  (void)delta;
  if (gamma.is_zero()) fail(errc::zero_element, "comparing against a zero scaling");
  if ((long)beta.order() < N)
    fail(errc::spec_mismatch, "truncation order too small for the requested check");
  return beta.truncate((unsigned long)N) == beta.scale_arg(gamma).truncate((unsigned long)N);
}

} // namespace cremona
