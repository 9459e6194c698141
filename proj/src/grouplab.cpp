#include "cremona/grouplab.hpp"

#include <limits>
#include <sstream>

#include "cremona/error.hpp"

namespace cremona {

namespace {

// h^i for i = -bound..bound at slot i + bound
std::vector<JonqMap> power_table(const JonqMap& h, long bound) {
  JonqMap id = JonqMap::identity(h.spec());
  std::vector<JonqMap> pos{id}, neg{id};
  JonqMap hinv = h.inverse();
  for (long i = 1; i <= bound; ++i) {
    pos.push_back(h.compose(pos.back()));
    neg.push_back(hinv.compose(neg.back()));
  }
  std::vector<JonqMap> table;
  table.reserve(2 * (std::size_t)bound + 1);
  for (long i = bound; i >= 1; --i) table.push_back(neg[(std::size_t)i]);
  for (long i = 0; i <= bound; ++i) table.push_back(pos[(std::size_t)i]);
  return table;
}

std::string describe(long i, long j) {
  return "f^" + std::to_string(i) + " g^" + std::to_string(j);
}

} // namespace

Report PairClassification::report() const {
  Report r;
  switch (kind) {
    case Kind::elliptic_pair:
      r.statement = "commuting pair: both generators are elliptic";
      r.anchor = "pair/elliptic";
      break;
    case Kind::torus_pair:
      r.statement = "commuting pair: fiberwise powers share a one-dimensional torus over K(x)";
      r.anchor = "pair/torus";
      break;
    case Kind::base_wandering_plus_elliptic:
      r.statement = "commuting pair: a base-wandering twist with an elliptic partner in normal form";
      r.anchor = "pair/base-wandering-plus-elliptic";
      break;
    case Kind::out_of_scope:
      r.statement = "commuting pair: outside the constructive cases";
      r.anchor = "pair/out-of-scope";
      break;
  }
  r.witness.emplace_back("bound", std::to_string(bound));
  if (kind == Kind::torus_pair) {
    r.witness.emplace_back("m", std::to_string(m));
    r.witness.emplace_back("n", std::to_string(n));
    if (conjugator) r.witness.emplace_back("conjugator", conjugator->to_string());
  }
  if (kind == Kind::base_wandering_plus_elliptic) {
    r.witness.emplace_back("twist", wandering == 0 ? "f" : "g");
    r.witness.emplace_back("subcase",
                           subcase == Subcase::multiplicative_form ? "multiplicative" : "additive");
    if (partner_form) r.witness.emplace_back("partner_form", partner_form->to_string());
  }
  r.witness.emplace_back(kind == Kind::out_of_scope ? "reason" : "trail", note);
  return r;
}

PairClassification classify_pair(const JonqMap& f, const JonqMap& g, long bound) {
  if (f.spec() != g.spec()) fail(errc::chart_mismatch, "the two maps live over different fields");
  if (bound < 1) fail(errc::spec_mismatch, "bound must be at least 1");
  if (!commutes(f, g)) fail(errc::not_commuting, "the maps do not commute");

  auto fp = power_table(f, bound);
  auto gp = power_table(g, bound);
  auto fpow = [&](long i) -> const JonqMap& { return fp[(std::size_t)(i + bound)]; };
  auto gpow = [&](long j) -> const JonqMap& { return gp[(std::size_t)(j + bound)]; };

  // f^i g^j = id exactly when f^i = g^-j; scan by increasing max(|i|, |j|)
  // so the reported relation is a shortest one
  for (long r = 1; r <= bound; ++r)
    for (long i = -r; i <= r; ++i)
      for (long j = -r; j <= r; ++j) {
        if (std::max(std::labs(i), std::labs(j)) != r) continue;
        if (fpow(i) == gpow(-j))
          fail(errc::not_free_rank_two,
               "relation " + describe(i, j) + " = id inside the checked bound");
      }

  PairClassification out;
  out.bound = bound;
  std::ostringstream trail;
  trail << "no relation f^i g^j = id for 0 < max(|i|, |j|) <= " << bound;

  EllipticVerdict vf = is_elliptic(f);
  EllipticVerdict vg = is_elliptic(g);
  trail << "; f " << (vf.elliptic ? "elliptic" : "not elliptic") << " (" << vf.method << ")";
  trail << "; g " << (vg.elliptic ? "elliptic" : "not elliptic") << " (" << vg.method << ")";
  if (vf.elliptic && vg.elliptic) {
    out.kind = PairClassification::Kind::elliptic_pair;
    out.note = trail.str();
    return out;
  }

  auto of = projective_order(f.base());
  auto og = projective_order(g.base());
  if (of && og) {
    if ((long)*of <= bound && (long)*og <= bound) {
      long m = (long)*of, n = (long)*og;
      const JonqMap& F = fpow(m);
      const JonqMap& G = gpow(n);
      bool ftw = !is_elliptic_fiberwise(F);
      bool gtw = !is_elliptic_fiberwise(G);
      if (ftw || gtw) {
        const JonqMap& lead = ftw ? F : G;
        const JonqMap& other = ftw ? G : F;
        try {
          Diagonalization D = diagonalize_over_kx(lead);
          auto e = other.fraction_entries();
          RatMat T = D.conj.inverse() * RatMat{e[0], e[1], e[2], e[3]} * D.conj;
          bool shared = false;
          std::string shape;
          if (D.kind == Diagonalization::Kind::split) {
            shared = T.b.is_zero() && T.c.is_zero();
            shape = "split";
          } else if (D.kind == Diagonalization::Kind::non_split) {
            shared = T.a == T.d && T.b == D.e2 * T.c;
            shape = "non-split";
          } else {
            shape = "scalar"; // a twist never diagonalizes to a scalar
          }
          if (shared) {
            out.kind = PairClassification::Kind::torus_pair;
            out.m = m;
            out.n = n;
            out.conjugator = D.conj;
            trail << "; f^" << m << " and g^" << n << " are fiberwise, "
                  << (ftw ? "f^m" : "g^n") << " a twist, and one conjugation puts both in the same "
                  << shape << " torus";
            out.note = trail.str();
            return out;
          }
          trail << "; fiberwise powers exist but the partner leaves the " << shape
                << " torus of the twist";
        } catch (const calc_error& err) {
          trail << "; fiberwise powers exist but diagonalization failed (" << err.what() << ")";
        }
      } else {
        trail << "; the fiberwise powers f^" << m << ", g^" << n << " are both elliptic";
      }
    } else {
      trail << "; base orders " << *of << ", " << *og << " exceed the bound";
    }
  } else if (!of && !og) {
    trail << "; both maps are base-wandering, beyond the constructive normal forms";
  } else {
    // exactly one base-wandering map
    bool fw = !of.has_value();
    const JonqMap& tw = fw ? f : g;
    const JonqMap& el = fw ? g : f;
    const EllipticVerdict& vtw = fw ? vf : vg;
    const EllipticVerdict& vel = fw ? vg : vf;
    if (vtw.elliptic) {
      trail << "; the base-wandering map is elliptic, not a twist";
    } else if (!vel.elliptic) {
      trail << "; exactly one map is base-wandering but its partner is not elliptic";
    } else {
      try {
        EllipticNormalForm nf = elliptic_normal_form_recognize(el);
        MembershipVerdict mv = cent_membership(nf, tw);
        if (mv.member) {
          out.kind = PairClassification::Kind::base_wandering_plus_elliptic;
          out.subcase = (nf.kind == EllipticNormalForm::Kind::diagonal_kk ||
                         nf.kind == EllipticNormalForm::Kind::fiber_diagonal)
                            ? PairClassification::Subcase::multiplicative_form
                            : PairClassification::Subcase::additive_form;
          out.wandering = fw ? 0 : 1;
          out.partner_form = nf;
          trail << "; " << (fw ? "f" : "g") << " is a base-wandering twist, partner form "
                << nf.to_string() << ", membership clause: " << mv.matched;
          out.note = trail.str();
          return out;
        }
        trail << "; partner in form " << nf.to_string()
              << " but the twist fails its centralizer formula (" << mv.matched << ")";
      } catch (const calc_error& err) {
        trail << "; partner not in a recognized normal form (" << err.what() << ")";
      }
    }
  }

  out.kind = PairClassification::Kind::out_of_scope;
  out.note = trail.str();
  return out;
}

namespace {

std::string fit_quadrant(const DegreeProfile& p) {
  long w = p.window;
  if (w == 0) return "bounded";
  for (long i = 0; i <= w; ++i)
    for (long j = 0; j <= w; ++j)
      if (p.at(i, j) < 0) return "truncated";

  long inner = 0, outer = 0;
  for (long i = 0; i <= w; ++i)
    for (long j = 0; j <= w; ++j) {
      long& slot = std::max(i, j) == w ? outer : inner;
      slot = std::max(slot, p.at(i, j));
    }
  if (outer <= inner) return "bounded (max degree " + std::to_string(inner) + ")";

  long c = p.at(0, 0);
  long a = p.at(1, 0) - c;
  long b = p.at(0, 1) - c;
  long e = p.at(1, 1) - a - b - c;
  bool exact = true;
  for (long i = 0; i <= w && exact; ++i)
    for (long j = 0; j <= w && exact; ++j)
      exact = p.at(i, j) == c + a * i + b * j + e * i * j;
  if (exact) {
    std::ostringstream s;
    s << (e != 0 ? "bilinear" : "affine") << ": deg(f^i g^j) = " << c;
    if (a != 0) s << " + " << a << "*i";
    if (b != 0) s << " + " << b << "*j";
    if (e != 0) s << " + " << e << "*i*j";
    s << " for i, j >= 0";
    return s.str();
  }
  return "irregular";
}

} // namespace

std::string DegreeProfile::to_csv() const {
  std::ostringstream out;
  out << "i,j,degree\n";
  for (long i = -window; i <= window; ++i)
    for (long j = -window; j <= window; ++j) out << i << "," << j << "," << at(i, j) << "\n";
  return out.str();
}

DegreeProfile degree_profile(const JonqMap& f, const JonqMap& g, long window) {
  if (f.spec() != g.spec()) fail(errc::chart_mismatch, "the two maps live over different fields");
  if (window < 0) fail(errc::spec_mismatch, "window must be nonnegative");
  if (!commutes(f, g)) fail(errc::not_commuting, "the maps do not commute");

  auto fp = power_table(f, window);
  auto gp = power_table(g, window);
  DegreeProfile out;
  out.window = window;
  out.deg.assign(2 * (std::size_t)window + 1, std::vector<long>(2 * (std::size_t)window + 1, 1));
  for (long i = -window; i <= window; ++i)
    for (long j = -window; j <= window; ++j) {
      long d;
      try {
        d = jonq_to_cremona(fp[(std::size_t)(i + window)].compose(gp[(std::size_t)(j + window)]))
                .degree();
      } catch (const calc_error& e) {
        if (e.code() != errc::degree_budget_exceeded) throw;
        d = -1;
      }
      out.deg[(std::size_t)(i + window)][(std::size_t)(j + window)] = d;
    }
  out.fit = fit_quadrant(out);
  return out;
}

namespace {

// xi[i] is a primitive q^i-th root of unity with xi[i+1]^q = xi[i]; xi[0] = 1
std::vector<FieldElem> xi_tower(const FieldSpec& s, unsigned long q, unsigned long depth) {
  if (q < 2) fail(errc::spec_mismatch, "q must be at least 2");
  unsigned long qd = 1;
  for (unsigned long i = 0; i < depth; ++i) {
    if (qd > std::numeric_limits<unsigned long>::max() / q)
      fail(errc::spec_mismatch, "q^depth does not fit a machine word");
    qd *= q;
  }
  std::vector<FieldElem> xi((std::size_t)depth + 1, FieldElem::one(s));
  if (depth > 0) {
    xi[depth] = FieldElem::root_of_unity(s, qd);
    for (unsigned long i = depth; i > 1; --i) xi[i - 1] = xi[i].pow((long)q);
  }
  return xi;
}

void check_choices(const FieldSpec& s, unsigned long depth, const std::vector<RatFunc>& rs) {
  unsigned long need = depth == 0 ? 0 : depth - 1;
  if (rs.size() < need)
    fail(errc::spec_mismatch, "the tower of depth " + std::to_string(depth) + " needs " +
                                  std::to_string(need) + " fraction choices");
  for (unsigned long j = 0; j < need; ++j) {
    if (rs[j].spec() != s) fail(errc::chart_mismatch, "fraction choice over the wrong field");
    if (rs[j].is_zero()) fail(errc::zero_element, "fraction choices must be nonzero");
  }
}

void check_tower(const FieldSpec& s, unsigned long q, const std::vector<JonqMap>& maps) {
  for (std::size_t lv = maps.size(); lv >= 1; --lv) {
    JonqMap pq = maps[lv - 1].pow((long)q);
    const JonqMap target = lv == 1 ? JonqMap::identity(s) : maps[lv - 2];
    if (pq != target) fail(errc::internal, "tower identity f_{i+1}^q = f_i failed the recheck");
  }
}

} // namespace

std::vector<JonqMap> example_torsion_multiplicative(const FieldSpec& s, unsigned long q,
                                                    unsigned long depth,
                                                    const std::vector<RatFunc>& R_choices) {
  check_choices(s, depth, R_choices);
  auto xi = xi_tower(s, q, depth);
  std::vector<JonqMap> out;
  out.reserve(depth);
  for (unsigned long lv = 1; lv <= depth; ++lv) {
    RatFunc S = RatFunc::one(s);
    unsigned long pw = q;
    for (unsigned long j = 1; j < lv; ++j) {
      RatFunc inner = RatFunc::from_poly(Poly::monomial(FieldElem::one(s), pw));
      RatFunc shifted = RatFunc::constant(xi[lv - j]) * inner;
      S *= R_choices[j - 1].substitute(inner) / R_choices[j - 1].substitute(shifted);
      pw *= q;
    }
    out.push_back(JonqMap::diagonal(MobiusK::scaling(xi[lv]), S));
  }
  check_tower(s, q, out);
  return out;
}

std::vector<JonqMap> example_torsion_additive(const FieldSpec& s, unsigned long q,
                                              unsigned long depth,
                                              const std::vector<RatFunc>& R_choices) {
  check_choices(s, depth, R_choices);
  auto xi = xi_tower(s, q, depth);
  std::vector<JonqMap> out;
  out.reserve(depth);
  for (unsigned long lv = 1; lv <= depth; ++lv) {
    RatFunc S = RatFunc::zero(s);
    unsigned long pw = q;
    for (unsigned long j = 1; j < lv; ++j) {
      RatFunc inner = RatFunc::from_poly(Poly::monomial(FieldElem::one(s), pw));
      RatFunc shifted = RatFunc::constant(xi[lv - j]) * inner;
      S += R_choices[j - 1].substitute(inner) - R_choices[j - 1].substitute(shifted);
      pw *= q;
    }
    out.push_back(JonqMap::translation_y(MobiusK::scaling(xi[lv]), S));
  }
  check_tower(s, q, out);
  return out;
}

JonqMap example_deserti(const FieldElem& alpha, const FieldElem& beta) {
  const FieldSpec& s = alpha.spec();
  if (beta.spec() != s) fail(errc::chart_mismatch, "alpha and beta live over different fields");
  if (alpha.is_zero()) fail(errc::zero_element, "alpha must be invertible");
  if (multiplicative_order(alpha))
    fail(errc::unsupported_element, "alpha must have infinite multiplicative order");
  PolyMat m{Poly::constant(beta), Poly::x(s), Poly::constant(FieldElem::one(s)),
            Poly::constant(FieldElem::one(s))};
  return JonqMap(MobiusK::scaling(alpha), std::move(m));
}

std::pair<JonqMap, JonqMap> example_centb(unsigned long k, const FieldElem& alpha) {
  const FieldSpec& s = alpha.spec();
  if (k == 0) fail(errc::spec_mismatch, "k must be at least 1");
  if (alpha.is_zero()) fail(errc::zero_element, "alpha must be invertible");
  if (multiplicative_order(alpha))
    fail(errc::unsupported_element, "alpha must have infinite multiplicative order");
  FieldElem mu = FieldElem::root_of_unity(s, k);
  Poly one = Poly::constant(FieldElem::one(s));
  Poly two = Poly::constant(FieldElem::from_integer(s, 2));
  Poly xk = Poly::monomial(FieldElem::one(s), k);
  JonqMap f(MobiusK::scaling(alpha), PolyMat{one + xk, xk, two + xk, one + xk});
  JonqMap g = JonqMap::base_only(MobiusK::scaling(mu));
  if (!commutes(f, g)) fail(errc::internal, "the constructed pair fails to commute");
  return {f, g};
}

} // namespace cremona
