#pragma once
#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cremona/error.hpp"

namespace cremona {

enum class FieldKind { rationals, cyclotomic, prime_field };

// Runtime description of the coefficient field: Q, Q(zeta_n) or F_p.
class FieldSpec {
public:
  static FieldSpec rationals();
  static FieldSpec cyclotomic(unsigned long n); // n >= 1
  static FieldSpec prime_field(unsigned long p);

  FieldKind kind() const { return kind_; }
  unsigned long n() const { return n_; }
  unsigned long p() const { return p_; }
  unsigned long characteristic() const { return kind_ == FieldKind::prime_field ? p_ : 0; }
  unsigned long extension_degree() const; // phi(n) for cyclotomic, else 1

  // Order of the group of roots of unity contained in the field:
  // 2 for Q, lcm(2, n) for Q(zeta_n), p - 1 for F_p.
  unsigned long torsion_order() const;

  bool operator==(const FieldSpec&) const = default;
  std::string to_string() const;              // "Q", "Qzeta:5", "Fp:7"
  static FieldSpec parse(const std::string&); // accepts the same strings

private:
  FieldSpec(FieldKind k, unsigned long n, unsigned long p) : kind_(k), n_(n), p_(p) {}
  FieldKind kind_;
  unsigned long n_ = 0;
  unsigned long p_ = 0;
};

// Immutable exact field element. Cyclotomic elements are coordinate vectors
// in the power basis 1, zeta, ..., zeta^(phi(n)-1) reduced mod the n-th
// cyclotomic polynomial.
class FieldElem {
public:
  explicit FieldElem(FieldSpec spec); // zero
  static FieldElem zero(const FieldSpec& s) { return FieldElem(s); }
  static FieldElem one(const FieldSpec& s);
  static FieldElem from_integer(const FieldSpec& s, long v);
  static FieldElem from_integer(const FieldSpec& s, const mpz_class& v);
  static FieldElem from_rational(const FieldSpec& s, const mpq_class& v);
  static FieldElem zeta(const FieldSpec& s); // class of x, cyclotomic only
  // Canonical primitive m-th root of unity; FieldTooSmall when the field has
  // none (i.e. m does not divide torsion_order()).
  static FieldElem root_of_unity(const FieldSpec& s, unsigned long m);
  // Canonical generator of the full group of roots of unity.
  static FieldElem torsion_generator(const FieldSpec& s);

  const FieldSpec& spec() const { return spec_; }

  bool is_zero() const;
  bool is_one() const;
  bool operator==(const FieldElem&) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  FieldElem operator-() const;
  FieldElem inverse() const; // ZeroElement on 0
  FieldElem pow(long e) const;
  FieldElem pow(const mpz_class& e) const;

  friend FieldElem operator+(const FieldElem&, const FieldElem&);
  friend FieldElem operator-(const FieldElem&, const FieldElem&);
  friend FieldElem operator*(const FieldElem&, const FieldElem&);
  friend FieldElem operator/(const FieldElem&, const FieldElem&);
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }

  // Projection to the prime field when the element happens to lie there.
  std::optional<mpq_class> as_rational() const;

  std::string to_string() const;

  const mpq_class& rat() const { return rat_; }
  const std::vector<mpq_class>& coords() const { return cyc_; }
  unsigned long res() const { return res_; }

private:
  FieldSpec spec_;
  mpq_class rat_;              // rationals
  std::vector<mpq_class> cyc_; // cyclotomic coordinates, size phi(n)
  unsigned long res_ = 0;      // prime-field residue
};

// Galois twist zeta_n -> zeta_n^k of a cyclotomic element; k must be coprime
// to n. Identity on Q and F_p elements.
FieldElem galois_twist(const FieldElem& a, unsigned long k);

// nullopt means infinite order. ZeroElement on 0.
std::optional<unsigned long> multiplicative_order(const FieldElem& a);

// Lattice of multiplicative relations { (i, j) : a^i b^j = 1 }, with a
// canonical basis: Hermite form rows; a rank-1 basis vector generates the
// lattice exactly and has positive leading entry.
struct RelationLattice {
  std::vector<std::array<mpz_class, 2>> basis;
  int rank() const { return static_cast<int>(basis.size()); }
};

// Requires a, b nonzero. Over Q(zeta_n) both inputs must be of the split
// shape rational * root-of-unity; otherwise UnsupportedElement.
RelationLattice relation_lattice(const FieldElem& a, const FieldElem& b);

// Some b with b^d = a, or nullopt. Over Q(zeta_n) the search is restricted
// to split-shape inputs and witnesses (rational times root of unity).
std::optional<FieldElem> nth_root_in_field(const FieldElem& a, unsigned long d);

// a = rational * g^power with rational > 0 and g = torsion_generator.
// Always succeeds over Q and F_p; over Q(zeta_n) only for split elements.
struct SplitUnit {
  mpq_class rational;   // > 0 (meaningless for F_p, fixed to 1)
  unsigned long power;  // exponent of the torsion generator
};
std::optional<SplitUnit> split_rational_times_root(const FieldElem& a);

// Factorization helper shared by the relation-lattice and root machinery.
// Returns prime -> exponent for v > 0.
std::vector<std::pair<mpz_class, unsigned long>> factor_positive(const mpz_class& v);

unsigned long euler_phi(unsigned long n);
std::vector<unsigned long> divisors_of(unsigned long n);

} // namespace cremona
