#pragma once
#include "cremona/jonq.hpp"
#include "cremona/tripoly.hpp"

namespace cremona {

// Rational self-map of the projective plane, written as three homogeneous
// components of equal degree with no common factor, first stored coefficient
// scaled to 1. Equality of normalized triples is equality of maps.
class CremonaMap {
public:
  CremonaMap(TriPoly X, TriPoly Y, TriPoly Z);

  static CremonaMap identity(const FieldSpec& s);

  const FieldSpec& spec() const { return comp_[0].spec(); }
  const std::array<TriPoly, 3>& components() const { return comp_; }
  long degree() const { return comp_[0].total_degree(); }
  bool is_identity() const;

  bool operator==(const CremonaMap&) const = default;
  bool operator!=(const CremonaMap& o) const { return !(*this == o); }

  // this after inner; throws DegreeBudgetExceeded when the working degree
  // would pass `budget` or the substitution would densify past reason
  CremonaMap compose(const CremonaMap& inner, long budget = 4096) const;
  CremonaMap pow(unsigned long n, long budget = 4096) const;

  // nullopt when the point is indeterminate (all components vanish)
  std::optional<std::array<FieldElem, 3>> apply(const std::array<FieldElem, 3>& p) const;

  std::string to_string() const;

private:
  std::array<TriPoly, 3> comp_;
};

// [deg(f^0)=1, deg(f), deg(f^2), ...], stopping early with the flag set when
// the next power would push the working degree past `budget` or densify past
// the internal term cap. Truncation is in-band, never an error.
struct DegreeSequence {
  std::vector<long> degrees;
  bool truncated = false;
};
DegreeSequence degree_sequence(const CremonaMap& f, unsigned long n_max,
                               long budget = 4096);

enum class GrowthType { elliptic, jonquieres_twist, halphen_twist, loxodromic, undetermined };
std::string growth_name(GrowthType t);

// Tail tests on the degree sequence, past a transient of 2*deg(f) entries:
// eventual periodicity (periods up to 4) means bounded degrees, eventually
// periodic first differences with positive sum mean linear growth, constant
// second differences mean quadratic growth, and a tail ratio of at least
// 21/20 means exponential growth. The exact difference tests run before the
// ratio test so that arithmetic sequences are never mistaken for slow
// exponentials. The note records which tail pattern matched.
struct GrowthClassification {
  GrowthType type = GrowthType::undetermined;
  std::string note;
};
GrowthClassification classify_growth(const std::vector<long>& degrees);
GrowthClassification classify_growth(const DegreeSequence& seq);
GrowthClassification classify_map_growth(const CremonaMap& f, unsigned long n_max = 24,
                                         long budget = 4096);

// The fibered-group element as a plane map: x = X/Z, y = Y/Z.
CremonaMap jonq_to_cremona(const JonqMap& f);

} // namespace cremona
