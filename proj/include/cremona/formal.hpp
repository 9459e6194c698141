#pragma once
#include "cremona/series.hpp"

namespace cremona {

// Local form of a fiber-permuting map at the invariant fiber x = 0:
//   (x, y) -> (alpha x, (A(x)y + B(x)) / (C(x)y + D(x)))
// normalized so that B(0) = C(0) = D(0) = 0 and A(0) != 0. Then (0, 0) is
// the distinguished indeterminacy point and alpha is the transverse
// multiplier. Coefficients are solved up to order N.
struct LocalModel {
  FieldElem alpha;
  Poly A, B, C, D;
  long N;

  // rejects a violated vanishing pattern, a singular fiber matrix,
  // and a base multiplier of finite order
  static LocalModel make(const FieldElem& alpha, const Poly& A, const Poly& B, const Poly& C,
                         const Poly& D, long N = 8);
};

// Each coefficient step solves one linear equation in two unknowns. The
// gauge unknown's structural coefficient vanishes for every valid model,
// so both preference orders land on the same solution; callers assert
// this instead of taking it on faith.
enum class PinOrder { gauge_last, gauge_first };

// Fiber coordinate change (x, y) -> (x, (E(x)y + F(x)) / (G(x)y + H(x)))
// with E(0) = H(0) = 1 and F(0) = G(0) = 0 taking the local model to the
// diagonal form (alpha x, beta(x) y). beta may have a pole at x = 0; its
// valuation is part of the certificate.
struct FormalConjugation {
  TruncSeries E, F, G, H;
  LaurentSeries beta;
  long residual_order;

  std::string to_string() const;
};

// Degree-by-degree solve of the two off-diagonal equations of
// adj(P(alpha x)) M(x) P(x), P = [[E, F], [G, H]]. The returned data is
// re-verified by recomputing that product from scratch: both off-diagonal
// entries vanish modulo x^(N+1) or an internal error is raised.
FormalConjugation solve_efgh(const LocalModel& m, PinOrder order = PinOrder::gauge_last);

// true iff beta(x/alpha) * theta(x/alpha) = theta(x) mod x^(N+1), i.e.
// theta is a fixed formal section of (alpha x, beta(x) y) to that order
bool fixed_formal_section_check(const FieldElem& alpha, const LaurentSeries& beta,
                                const TruncSeries& theta, long N);
bool fixed_formal_section_check(const FieldElem& alpha, const TruncSeries& beta,
                                const TruncSeries& theta, long N);

// true iff beta(x) = beta(gamma x) mod x^(N+1): the commutation condition
// of (alpha x, beta(x) y) against (gamma x, delta y), whose scalar parts
// cancel, which is why alpha and delta do not enter the comparison
bool diagonal_commutant_check(const FieldElem& alpha, const TruncSeries& beta,
                              const FieldElem& gamma, const FieldElem& delta, long N);

} // namespace cremona
