#include "cremona/cremona_map.hpp"

#include <sstream>

namespace cremona {

namespace {

bool all_monomial(const CremonaMap& f) {
  for (auto& c : f.components())
    if (c.term_count() != 1) return false;
  return true;
}

std::size_t widest_component(const CremonaMap& f) {
  std::size_t w = 0;
  for (auto& c : f.components()) w = std::max(w, c.term_count());
  return w;
}

} // namespace

CremonaMap::CremonaMap(TriPoly X, TriPoly Y, TriPoly Z)
    : comp_{std::move(X), std::move(Y), std::move(Z)} {
  const FieldSpec& s = comp_[0].spec();
  for (auto& c : comp_) {
    if (c.spec() != s) fail(errc::spec_mismatch, "components over different fields");
    if (c.is_zero()) fail(errc::zero_element, "zero component");
    if (!c.is_homogeneous()) fail(errc::not_homogeneous, "component is not homogeneous");
  }
  TriPoly g = tri_gcd({comp_[0], comp_[1], comp_[2]});
  if (g.total_degree() > 0)
    for (auto& c : comp_) c = tri_divexact(c, g);
  long d = comp_[0].total_degree();
  if (comp_[1].total_degree() != d || comp_[2].total_degree() != d)
    fail(errc::inconsistent_degrees, "components of unequal degree");
  FieldElem head = comp_[0].terms().begin()->second;
  if (!head.is_one()) {
    FieldElem u = head.inverse();
    for (auto& c : comp_) c = u * c;
  }
}

CremonaMap CremonaMap::identity(const FieldSpec& s) {
  return CremonaMap(TriPoly::variable(s, 0), TriPoly::variable(s, 1), TriPoly::variable(s, 2));
}

bool CremonaMap::is_identity() const { return *this == identity(spec()); }

CremonaMap CremonaMap::compose(const CremonaMap& inner, long budget) const {
  if (spec() != inner.spec()) fail(errc::spec_mismatch, "composition across fields");
  long D = degree() * inner.degree();
  if (D > budget)
    fail(errc::degree_budget_exceeded, "composition degree " + std::to_string(D) +
                                           " exceeds the budget of " + std::to_string(budget));
  if (!all_monomial(inner) && degree() >= 2) {
    double dense = (double)(D + 1) * (double)(D + 2) / 2.0;
    double mx = (double)widest_component(inner);
    if (dense > 6.0e5 || mx * std::min(mx, dense) > 6.0e8)
      fail(errc::degree_budget_exceeded, "composition at degree " + std::to_string(D) +
                                             " would densify past the working budget");
  }
  const TriPoly& P = inner.comp_[0];
  const TriPoly& Q = inner.comp_[1];
  const TriPoly& R = inner.comp_[2];
  return CremonaMap(comp_[0].substitute(P, Q, R), comp_[1].substitute(P, Q, R),
                    comp_[2].substitute(P, Q, R));
}

CremonaMap CremonaMap::pow(unsigned long n, long budget) const {
  CremonaMap acc = identity(spec());
  // the accumulated iterate is the inner argument: substituting large
  // components into a small formula is far cheaper than the reverse
  for (unsigned long i = 0; i < n; ++i) acc = compose(acc, budget);
  return acc;
}

std::optional<std::array<FieldElem, 3>> CremonaMap::apply(
    const std::array<FieldElem, 3>& p) const {
  std::array<FieldElem, 3> out = {comp_[0].eval(p[0], p[1], p[2]),
                                  comp_[1].eval(p[0], p[1], p[2]),
                                  comp_[2].eval(p[0], p[1], p[2])};
  if (out[0].is_zero() && out[1].is_zero() && out[2].is_zero()) return std::nullopt;
  return out;
}

std::string CremonaMap::to_string() const {
  return "[" + comp_[0].to_string() + " : " + comp_[1].to_string() + " : " +
         comp_[2].to_string() + "]";
}

DegreeSequence degree_sequence(const CremonaMap& f, unsigned long n_max, long budget) {
  DegreeSequence out;
  out.degrees.push_back(1);
  if (n_max == 0) return out;
  out.degrees.push_back(f.degree());
  // dense components make further composition quadratically more expensive,
  // so cap the working term count alongside the degree
  const long term_budget = 120000;
  CremonaMap acc = f;
  for (unsigned long k = 2; k <= n_max; ++k) {
    long next = acc.degree() * f.degree();
    long dense = (next + 1) * (next + 2) / 2;
    if (next > budget || (!all_monomial(acc) && f.degree() >= 2 && dense > term_budget)) {
      out.truncated = true;
      break;
    }
    acc = f.compose(acc, budget);
    out.degrees.push_back(acc.degree());
  }
  return out;
}

std::string growth_name(GrowthType t) {
  switch (t) {
    case GrowthType::elliptic: return "Elliptic";
    case GrowthType::jonquieres_twist: return "JonquieresTwist";
    case GrowthType::halphen_twist: return "HalphenTwist";
    case GrowthType::loxodromic: return "Loxodromic";
    case GrowthType::undetermined: return "Undetermined";
  }
  return "?";
}

GrowthClassification classify_growth(const std::vector<long>& d) {
  std::size_t n = d.size();
  if (n < 8) fail(errc::sequence_too_short, "need at least 8 degrees to classify");
  // skip a transient of twice the initial degree when the list allows it
  std::size_t start = std::min<std::size_t>((std::size_t)std::max<long>(2 * d[1], 1), n - 6);

  for (std::size_t p = 1; p <= 4; ++p) {
    bool periodic = true;
    for (std::size_t i = start + p; i < n; ++i)
      if (d[i] != d[i - p]) {
        periodic = false;
        break;
      }
    if (periodic)
      return {GrowthType::elliptic, p == 1 ? "degree stays at " + std::to_string(d[n - 1])
                                           : "periodic tail, period " + std::to_string(p)};
  }

  // linear growth shows up as first differences that settle into a periodic
  // pattern with positive sum; period 1 is the plain arithmetic case
  std::vector<long> diff;
  for (std::size_t i = start + 1; i < n; ++i) diff.push_back(d[i] - d[i - 1]);
  for (std::size_t p = 1; p <= 4 && 2 * p <= diff.size(); ++p) {
    bool periodic = true;
    for (std::size_t i = p; i < diff.size(); ++i)
      if (diff[i] != diff[i - p]) {
        periodic = false;
        break;
      }
    if (!periodic) continue;
    long sum = 0;
    for (std::size_t i = 0; i < p; ++i) sum += diff[diff.size() - 1 - i];
    if (sum <= 0) break; // zero-sum periodic differences are a periodic tail
    if (p == 1) return {GrowthType::jonquieres_twist, "slope " + std::to_string(sum)};
    return {GrowthType::jonquieres_twist, "first differences periodic, mean slope " +
                                              std::to_string(sum) + "/" + std::to_string(p)};
  }

  long s2 = d[start + 2] - 2 * d[start + 1] + d[start];
  bool quadratic = s2 > 0;
  for (std::size_t i = start + 2; i < n && quadratic; ++i)
    if (d[i] - 2 * d[i - 1] + d[i - 2] != s2) quadratic = false;
  if (quadratic) return {GrowthType::halphen_twist, "second difference " + std::to_string(s2)};

  bool expanding = d[n - 1] > d[start];
  for (std::size_t i = start + 1; i < n && expanding; ++i)
    if (20 * d[i] < 21 * d[i - 1]) expanding = false;
  if (expanding) {
    mpq_class r(d[n - 1], d[n - 2]);
    r.canonicalize();
    return {GrowthType::loxodromic, "ratio " + r.get_str()};
  }

  return {GrowthType::undetermined, "tail matches no growth pattern"};
}

GrowthClassification classify_growth(const DegreeSequence& seq) {
  if (seq.truncated)
    return {GrowthType::undetermined, "degree budget reached after " +
                                          std::to_string(seq.degrees.size() - 1) + " iterates"};
  return classify_growth(seq.degrees);
}

GrowthClassification classify_map_growth(const CremonaMap& f, unsigned long n_max, long budget) {
  return classify_growth(degree_sequence(f, n_max, budget));
}

CremonaMap jonq_to_cremona(const JonqMap& f) {
  const FieldSpec& s = f.spec();
  TriPoly X = TriPoly::variable(s, 0);
  TriPoly Y = TriPoly::variable(s, 1);
  TriPoly Z = TriPoly::variable(s, 2);

  auto lift_linear = [&](const FieldElem& u, const FieldElem& v) {
    // u X + v Z
    TriPoly t(s);
    t.add_term({1, 0, 0}, u);
    t.add_term({0, 0, 1}, v);
    return t;
  };
  TriPoly P = lift_linear(f.base().a(), f.base().b());
  TriPoly Q = lift_linear(f.base().c(), f.base().d());

  long m = std::max<long>(f.mat().max_degree(), 0);
  auto homog = [&](const Poly& p) {
    // Z^m p(X/Z)
    TriPoly t(s);
    for (long i = 0; i <= p.degree(); ++i)
      t.add_term({(unsigned)i, 0, (unsigned)(m - i)}, p.coeff((std::size_t)i));
    return t;
  };
  TriPoly S = homog(f.mat().a) * Y + homog(f.mat().b) * Z;
  TriPoly T = homog(f.mat().c) * Y + homog(f.mat().d) * Z;
  return CremonaMap(P * T, Q * S, Q * T);
}

} // namespace cremona
