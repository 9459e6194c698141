#pragma once
#include "cremona/cremona_map.hpp"

namespace cremona {

// 2x2 matrix over K(x) acting on the fiber coordinate.
struct RatMat {
  RatFunc a, b, c, d;

  static RatMat identity(const FieldSpec& s);
  const FieldSpec& spec() const { return a.spec(); }
  RatFunc det() const { return a * d - b * c; }
  RatMat inverse() const; // ZeroElement on det = 0
  bool operator==(const RatMat&) const = default;
  std::string to_string() const;
};
RatMat operator*(const RatMat&, const RatMat&);

// Trace^2/det of the fiber matrix, reduced. Well defined on the projective
// class; requires a trivial base action (NotFiberwise otherwise).
RatFunc delta(const JonqMap& f);

// Constant Delta is equivalent to bounded degree growth for f in Jonq_0.
bool is_elliptic_fiberwise(const JonqMap& f);

// Bounded-degree verdict with the reduction that produced it. `exact` is
// false only on the degree-sequence fallback, which can also leave the
// growth type undetermined; `method` records the path taken.
struct EllipticVerdict {
  bool elliptic = false;
  bool exact = false;
  std::string method;
};

// Exact paths: base of finite order m -> constant-Delta test on f^m; base of
// infinite order with diagonal fiber -> telescope_split; base of infinite
// order with fiber y + R(x) -> pole locus of R in the model coordinate
// (Laurent-polynomial test at a multiplicative base, polynomial test at a
// parabolic one). Everything else falls back to classify_map_growth.
EllipticVerdict is_elliptic(const JonqMap& f);

// Eigenstructure of the fiber matrix over K(x).
struct Diagonalization {
  enum class Kind { split, non_split, scalar };
  Kind kind = Kind::scalar;
  // split: the two eigenvalues; non_split: e1 = common diagonal entry and
  // e2 = upper-right entry of the normal form [[e1, e2], [1, e1]], with
  // e2 = (Trace^2 - 4 det)/4; scalar: both equal the scalar.
  RatFunc e1, e2;
  RatMat conj; // P with P^-1 M P in the stated shape; identity when scalar
};

// Split needs the discriminant to be a square in K(x) with distinct
// eigenvalues; the unipotent non-scalar case lands in non_split with e2 = 0.
// Errors: NotFiberwise, Char2NonSplit, UndecidedSquare.
Diagonalization diagonalize_over_kx(const JonqMap& f);

// R(x) = r S(x) / S(eta(x)), the splitting that conjugates (eta, R(x) y) to
// the constant-multiplier map (eta, r y) via (x, S(x) y).
struct TelescopeDecomposition {
  FieldElem r;
  RatFunc S;
  bool certified = false; // R * (S o eta) == r * S rechecked exactly
};

// Finite-order base: the orbit product of R must be a constant with a d-th
// root in K (RootNotInField names the missing degree); S comes from a
// resolvent sum over the orbit. Infinite-order base: zeros and poles of R
// must telescope along base orbits, matched factor by factor in the model
// coordinate. NotElliptic when either obstruction is nonzero. Characteristic
// zero only (CharPUnsupported); a base with fixed points outside K raises
// UnresolvedFixedPoints.
TelescopeDecomposition telescope_split(const MobiusK& eta, const RatFunc& R);

// R(x) = S(eta(x)) - S(x) + c/d for a base of finite order d, the additive
// counterpart. The orbit sum of R must be the constant c (NotSplittable
// otherwise); d must be invertible in K.
struct AdditiveTelescope {
  FieldElem c;
  RatFunc S;
  bool certified = false; // R == (S o eta) - S + c/d rechecked exactly
};
AdditiveTelescope additive_telescope_split(const MobiusK& eta, const RatFunc& R);

// Fiberwise involution (x, a(x)/y), fixing the curve y^2 = a(x).
struct InvolutionCurve {
  RatFunc a;
  Poly curve; // squarefree model: odd-multiplicity part of num(a) * den(a)
};

// Accepts exactly the anti-diagonal fiber shape; NotInvolutionForm otherwise.
InvolutionCurve involution_curve(const JonqMap& f);

// The four shape classes of elliptic elements the membership predicates
// understand. diagonal_kk is (alpha x, beta y) carrying the multiplicative
// relation lattice of the pair; k is set when that lattice is generated by
// (k, 0), the convention the centralizer formula needs (k = 0 when the
// lattice is trivial). affine_translation is (alpha x, y + 1),
// fiber_diagonal is (x, beta y), fiber_translation is (x, y + 1).
struct EllipticNormalForm {
  enum class Kind { diagonal_kk, affine_translation, fiber_diagonal, fiber_translation };
  Kind kind = Kind::fiber_translation;
  FieldElem alpha, beta; // unused slots fixed to 1
  RelationLattice lattice;
  std::optional<unsigned long> k;

  static EllipticNormalForm diagonal(const FieldElem& alpha, const FieldElem& beta);
  static EllipticNormalForm affine_translation(const FieldElem& alpha);
  static EllipticNormalForm fiber_diagonal(const FieldElem& beta);
  static EllipticNormalForm fiber_translation(const FieldSpec& s);

  const FieldSpec& spec() const { return alpha.spec(); }
  JonqMap model() const; // the map the form denotes
  std::string to_string() const;
};

// Shape-only recognition: the map must already be (alpha x, beta y) or
// (alpha x, y + c); no conjugation search. Constant translations are
// rescaled to 1. In characteristic p the translation form needs a base
// multiplier of infinite order, so it is never recognized over F_p.
// Errors: NotElliptic, NotRecognized.
EllipticNormalForm elliptic_normal_form_recognize(const JonqMap& f);

struct MembershipVerdict {
  bool member = false;
  std::string matched; // clause that decided, or the failing condition
};

// Structural membership test for Cent(form.model()). diagonal_kk: g must be
// (eta(x), y R(x)) with eta commuting with x -> alpha x and R invariant
// under x -> zeta_k x (R constant when k = 0). affine_translation in
// characteristic zero: g = (eta(x), y + R(x)) with the same eta condition
// and R(alpha x) = R(x). affine_translation in characteristic p reads g in
// the y-fibration chart, as (R(y) x, y + t) with R(y + 1) = R(y). The fiber
// kinds accept any g preserving their shape class. The formulas characterize
// the centralizer when the model has infinite order; membership = true
// always implies commutation. ChartMismatch on a field mismatch.
MembershipVerdict cent_membership(const EllipticNormalForm& form, const JonqMap& g);

// Shape of the fiber-preserving centralizer part for a base-wandering twist:
// (a(x), R(x) y) allows the multiplicative flow (x, t y), (a(x), y + S(x))
// the additive flow (x, y + t), (a(x), R(x)/y) only the involution (x, -y);
// anything else is at most torsion. Twist-ness of f is the caller's burden;
// for elliptic f the answer only names a subgroup.
struct Cent0Structure {
  enum class Kind { multiplicative_flow, additive_flow, order_two, torsion_or_trivial };
  Kind kind = Kind::torsion_or_trivial;
  std::optional<JonqMap> witness; // a commuting generator sample
  std::string note;
};

// NotBaseWandering when the base action has finite order.
Cent0Structure cent0_structure(const JonqMap& f);

} // namespace cremona
