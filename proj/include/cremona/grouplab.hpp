#pragma once
#include "cremona/centralizer.hpp"

namespace cremona {

// Verdict for a commuting pair that generates, as far as the checked bound
// can tell, a free abelian group of rank two. Every positive verdict carries
// the data needed to re-run the decision: ellipticity method notes, the
// powers and conjugator of the torus case, or the partner normal form and
// membership clause of the mixed case.
struct PairClassification {
  enum class Kind { elliptic_pair, torus_pair, base_wandering_plus_elliptic, out_of_scope };
  enum class Subcase { none, multiplicative_form, additive_form };

  Kind kind = Kind::out_of_scope;
  Subcase subcase = Subcase::none;
  long bound = 0; // relations were ruled out for 0 < max(|i|, |j|) <= bound
  long m = 0, n = 0; // torus case: f^m and g^n are the fiberwise powers used
  int wandering = -1; // mixed case: 0 when f is the base-wandering twist, 1 when g is
  std::optional<RatMat> conjugator; // torus case: common eigenbasis over K(x)
  std::optional<EllipticNormalForm> partner_form; // mixed case: the elliptic partner's shape
  std::string note; // evidence trail, or the reason a pair is out of scope

  Report report() const;
  std::string to_string() const { return report().text(); }
};

// Decides which constructive normal-form case a commuting pair falls into.
// elliptic_pair: both maps elliptic. torus_pair: powers f^m, g^n (m, n
// minimal, at most `bound`) act trivially on the base, at least one of them
// has non-constant Delta, and one diagonalization puts both in the same
// split or non-split torus over K(x). base_wandering_plus_elliptic: exactly
// one map is a base-wandering twist and the other is literally in an
// elliptic normal form whose centralizer formula accepts the twist. No
// conjugation is searched for; pairs presented in other coordinates come
// back out_of_scope with the failing condition in `note`.
// Errors: NotCommuting; NotFreeRankTwo when some f^i g^j with
// 0 < max(|i|, |j|) <= bound is the identity.
PairClassification classify_pair(const JonqMap& f, const JonqMap& g, long bound = 12);

// Exact plane-map degrees of f^i g^j over a square window.
struct DegreeProfile {
  long window = 0;
  // deg[i + window][j + window] = deg(f^i g^j); -1 marks a cell whose
  // conversion hit the degree budget
  std::vector<std::vector<long>> deg;
  // fit over the quadrant i, j >= 0: "bounded", "affine", "bilinear" (each
  // with the exact coefficients when the model matches every cell),
  // "irregular", or "truncated" when a -1 cell blocks the fit
  std::string fit;

  long at(long i, long j) const { return deg[i + window][j + window]; }
  std::string to_csv() const; // header i,j,degree; rows in row-major order
};
DegreeProfile degree_profile(const JonqMap& f, const JonqMap& g, long window = 4);

// Tower f_1, ..., f_depth with f_{i+1}^q = f_i, built over a field containing
// a primitive q^depth-th root of unity: f_{i+1} = (xi_{i+1} x, y S_{i+1}(x))
// where xi_{i+1}^q = xi_i and S_{i+1} is the telescoping product of the
// fractions R_j(x^{q^j}) / R_j(xi_{i+1-j} x^{q^j}) for j = 1..i. The group
// identities f_{i+1}^q = f_i are rechecked symbolically before returning.
// R_choices supplies R_1, ..., R_{depth-1} (extra entries are ignored).
// Errors: FieldTooSmall when the root of unity is missing.
std::vector<JonqMap> example_torsion_multiplicative(const FieldSpec& s, unsigned long q,
                                                    unsigned long depth,
                                                    const std::vector<RatFunc>& R_choices);

// Additive counterpart: f_{i+1} = (xi_{i+1} x, y + S_{i+1}(x)) with S_{i+1}
// the telescoping sum of R_j(x^{q^j}) - R_j(xi_{i+1-j} x^{q^j}).
std::vector<JonqMap> example_torsion_additive(const FieldSpec& s, unsigned long q,
                                              unsigned long depth,
                                              const std::vector<RatFunc>& R_choices);

// (alpha x, (beta y + x) / (y + 1)), a twist whose determinant beta - x
// degenerates on the fiber x = beta; for beta != 0 that fiber wanders under
// the base action, so the indeterminacy point there is persistent. alpha
// must have infinite order.
JonqMap example_deserti(const FieldElem& alpha, const FieldElem& beta);

// f = (alpha x, ((1+x^k) y + x^k) / ((2+x^k) y + 1+x^k)) together with
// g = (mu x, y) for a primitive k-th root of unity mu; the fiber matrix only
// involves x^k, so the pair commutes, and that is asserted on construction.
// alpha must have infinite order; k = 1 gives g = id.
// Errors: FieldTooSmall when mu is missing.
std::pair<JonqMap, JonqMap> example_centb(unsigned long k, const FieldElem& alpha);

} // namespace cremona
