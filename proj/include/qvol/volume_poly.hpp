#pragma once

// Polynomials in L_1^2, ..., L_n^2 with ring coefficients, and the univariate /
// bivariate helpers used by the kernel integrals.

#include "qvol/ring.hpp"

#include <map>
#include <utility>
#include <vector>

namespace qvol {

/// Univariate polynomial with RingElem coefficients; exponents are raw powers.
class UniPoly {
 public:
  explicit UniPoly(GenFamily family) : family_(family) {}

  GenFamily family() const { return family_; }
  const std::map<unsigned, RingElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest exponent; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first); }
  bool is_even() const;
  bool is_odd() const;
  RingElem coeff(unsigned e) const;

  void add_term(unsigned e, const RingElem& c);
  UniPoly& operator*=(const Rat& c);
  /// Antiderivative from 0: t^e -> t^{e+1}/(e+1).
  UniPoly integrate() const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.family_ == b.family_ && a.terms_ == b.terms_;
  }

 private:
  GenFamily family_;
  std::map<unsigned, RingElem> terms_;
};

/// Total weight when deg(var) = 1: nullopt if inhomogeneous or zero.
std::optional<unsigned> total_weight(const UniPoly& p);

/// Polynomial in (L_1, L_j) with raw exponents; the R-kernel moments.
class BiPoly {
 public:
  using Key = std::pair<unsigned, unsigned>;
  explicit BiPoly(GenFamily family) : family_(family) {}

  GenFamily family() const { return family_; }
  const std::map<Key, RingElem>& terms() const { return terms_; }
  void add_term(Key e, const RingElem& c);

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.family_ == b.family_ && a.terms_ == b.terms_;
  }

 private:
  GenFamily family_;
  std::map<Key, RingElem> terms_;
};

/// Polynomial in L_1^2..L_n^2; an exponent vector (a_1..a_n) is the monomial
/// prod L_i^{2 a_i}. Symmetry is not enforced by the representation.
class VolumePoly {
 public:
  using Exponents = std::vector<unsigned>;
  using Terms = std::map<Exponents, RingElem>;

  VolumePoly(GenFamily family, unsigned arity) : family_(family), arity_(arity) {}
  static VolumePoly constant(GenFamily family, unsigned arity, const Rat& c);

  GenFamily family() const { return family_; }
  unsigned arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RingElem coeff(const Exponents& e) const;

  void add_term(const Exponents& e, const RingElem& c);
  VolumePoly& operator+=(const VolumePoly& o);
  VolumePoly& operator*=(const Rat& c);

  friend bool operator==(const VolumePoly& a, const VolumePoly& b) {
    return a.family_ == b.family_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  GenFamily family_;
  unsigned arity_;
  Terms terms_;
};

/// Invariance under every permutation of the boundary variables.
bool check_symmetry(const VolumePoly& v);
/// Every (L-monomial, ring-monomial) pair has weight 2*sum(a_i) + ring weight == weight.
bool check_homogeneity(const VolumePoly& v, unsigned weight);

/// Applies ring_substitute to every coefficient.
VolumePoly substitute(const VolumePoly& v, GenFamily target,
                      const std::map<unsigned, RingElem>& images);

unsigned max_generator(const VolumePoly& v);

/// The part of v whose coefficients are rational (weight-0 ring part).
VolumePoly constant_ring_part(const VolumePoly& v);

}  // namespace qvol
