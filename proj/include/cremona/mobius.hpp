#pragma once
#include "cremona/ratfunc.hpp"

namespace cremona {

struct P1Point {
  bool inf = false;
  FieldElem v;

  static P1Point infinity(const FieldSpec& s) { return {true, FieldElem::zero(s)}; }
  static P1Point at(FieldElem x) { return {false, std::move(x)}; }

  bool operator==(const P1Point& o) const {
    return inf == o.inf && (inf || v == o.v);
  }
  bool operator!=(const P1Point& o) const { return !(*this == o); }
  std::string to_string() const { return inf ? "inf" : v.to_string(); }
};

// Fractional-linear map (a x + b) / (c x + d) with ad - bc != 0, stored with
// the first nonzero entry of (a, b, c, d) scaled to 1, so that projective
// equality is literal equality.
class MobiusK {
public:
  MobiusK(FieldElem a, FieldElem b, FieldElem c, FieldElem d);

  static MobiusK identity(const FieldSpec& s);
  static MobiusK scaling(const FieldElem& alpha);     // alpha x, alpha != 0
  static MobiusK translation(const FieldElem& t);     // x + t
  static MobiusK inversion(const FieldSpec& s);       // 1 / x

  const FieldSpec& spec() const { return a_.spec(); }
  const FieldElem& a() const { return a_; }
  const FieldElem& b() const { return b_; }
  const FieldElem& c() const { return c_; }
  const FieldElem& d() const { return d_; }
  FieldElem det() const { return a_ * d_ - b_ * c_; }
  FieldElem trace_sq_over_det() const;

  bool operator==(const MobiusK&) const = default;
  bool operator!=(const MobiusK& o) const { return !(*this == o); }
  bool is_identity() const;

  MobiusK compose(const MobiusK& inner) const; // this after inner
  MobiusK inverse() const;
  MobiusK pow(long n) const;

  P1Point apply(const P1Point& p) const;
  P1Point apply(const FieldElem& x) const { return apply(P1Point::at(x)); }
  RatFunc as_ratfunc() const;

  std::string to_string(const std::string& var = "x") const;

private:
  FieldElem a_, b_, c_, d_;
};

// Order in PGL_2(K); nullopt for infinite order.
std::optional<unsigned long> projective_order(const MobiusK& m);

// Fixed points on P^1(K). `resolved` is false when the fixed points exist
// only over a quadratic extension (or the square root is out of reach over
// a cyclotomic field).
struct FixedPoints {
  bool whole_line = false; // identity
  std::vector<P1Point> pts;
  bool resolved = true;
};
FixedPoints fixed_points(const MobiusK& m);

// Conjugacy data for iteration: finite order, or infinite order reduced to
// the model alpha x (two fixed points in P^1(K)) or x + 1 (one fixed point,
// char 0). `coordinate` is psi with psi^-1 m psi = model.
struct BaseOrderReport {
  enum class Kind {
    finite_order,
    infinite_multiplicative,
    infinite_parabolic,
    unresolved_fixed_points
  };
  Kind kind = Kind::finite_order;
  std::optional<unsigned long> order;
  std::optional<FieldElem> multiplier;   // infinite_multiplicative
  std::optional<MobiusK> coordinate;     // infinite cases with fixed pts in K
};
BaseOrderReport base_order_report(const MobiusK& m);

} // namespace cremona
