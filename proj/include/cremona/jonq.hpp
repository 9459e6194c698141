#pragma once
#include "cremona/mobius.hpp"
#include "cremona/report.hpp"

namespace cremona {

// 2x2 matrix over K[x] acting on the fiber coordinate by fractional-linear
// transformations.
struct PolyMat {
  Poly a, b, c, d;
  Poly det() const { return a * d - b * c; }
  long max_degree() const;
};

// Element (eta, M) of PGL_2(K) x| PGL_2(K(x)) acting by
//   (x, y) |-> (eta(x), (a(x) y + b(x)) / (c(x) y + d(x))).
// The matrix is stored primitive (no common polynomial factor) with its first
// nonzero coefficient, scanning a, b, c, d by ascending degree, equal to 1;
// equality of normalized pairs is equality in the group.
class JonqMap {
public:
  JonqMap(MobiusK base, PolyMat mat); // RankZeroFiber when det(mat) = 0

  static JonqMap identity(const FieldSpec& s);
  static JonqMap base_only(MobiusK eta);
  static JonqMap fiberwise(PolyMat mat, const FieldSpec& s);
  // entries given as rational functions; denominators are cleared
  static JonqMap from_fractions(MobiusK eta, const RatFunc& A, const RatFunc& B,
                                const RatFunc& C, const RatFunc& D);
  static JonqMap diagonal(MobiusK eta, const RatFunc& r);      // (eta, r(x) y)
  static JonqMap translation_y(MobiusK eta, const RatFunc& r); // (eta, y + r(x))

  const FieldSpec& spec() const { return base_.spec(); }
  const MobiusK& base() const { return base_; }
  const PolyMat& mat() const { return mat_; }
  std::array<RatFunc, 4> fraction_entries() const; // a, b, c, d over K(x)
  bool is_fiberwise() const { return base_.is_identity(); }
  bool is_identity() const;

  bool operator==(const JonqMap& o) const;
  bool operator!=(const JonqMap& o) const { return !(*this == o); }

  JonqMap compose(const JonqMap& inner) const; // this after inner
  JonqMap inverse() const;
  JonqMap pow(long n) const;

  // Image of (x0, y); nullopt exactly at an indeterminacy point (x0 on a
  // degenerate fiber, y on the kernel direction).
  std::optional<std::pair<P1Point, P1Point>> apply(const FieldElem& x0, const P1Point& y) const;

  std::string to_string() const;

private:
  MobiusK base_;
  PolyMat mat_;
};

bool commutes(const JonqMap& f, const JonqMap& g);
JonqMap conjugate(const JonqMap& f, const JonqMap& g); // g^-1 f g

// Trace^2 / det of the fiber matrix, the basic fiberwise-ellipticity
// invariant: constant iff conjugation can make the fiber action independent
// of the base point. Transforms by base substitution under conjugation.
RatFunc delta_of(const JonqMap& f);

// Degenerate fibers x0 (roots of det M, plus infinity when the degree of
// det M falls short of twice the matrix degree). The kernel direction is the
// fiber point blown down / indeterminate on that fiber. An event is
// persistent when the base map has infinite order and moves x0.
struct FiberEvent {
  P1Point base;
  P1Point kernel_dir;
  unsigned long multiplicity = 1;
  bool persistent = false;
};
struct FiberReport {
  std::vector<FiberEvent> events;
  std::vector<Poly> unresolved; // det factors with no roots found in K
  bool base_infinite_order = false;
};
FiberReport fiber_events(const JonqMap& f);

// Structure statement for the fiberwise part of the centralizer of a map
// with a persistent degenerate fiber, derived from how the base map type
// bounds the group generated alongside such an element.
Report centralizer_persistence_report(const JonqMap& f);

} // namespace cremona
