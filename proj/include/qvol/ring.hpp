#pragma once

// Graded polynomial ring Q[g_1, g_2, ...] whose generators are, depending on the
// family, zeta_q(2k), the odd q-zeta values, or the single generator pi^2.
// Generator k has weight 2k (pi^2 is generator 1, weight 2). Generators are
// treated as algebraically independent.

#include "qvol/rat.hpp"

#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace qvol {

enum class GenFamily { QZeta, QZetaOdd, PiSq };

std::string_view family_name(GenFamily f);  // "q_zeta" | "q_zeta_odd" | "pi_sq"
GenFamily parse_family(std::string_view s);

/// Sparse exponent multi-index: sorted (generator index, exponent > 0) pairs.
using Monomial = std::vector<std::pair<unsigned, unsigned>>;

Monomial monomial_mul(const Monomial& a, const Monomial& b);
unsigned monomial_weight(const Monomial& m);

class RingElem {
 public:
  using Terms = std::map<Monomial, Rat>;

  explicit RingElem(GenFamily family = GenFamily::QZeta) : family_(family) {}
  RingElem(GenFamily family, const Rat& constant);

  static RingElem generator(GenFamily family, unsigned k, unsigned exponent = 1);

  GenFamily family() const { return family_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when the element lies in Q (no generators).
  bool is_constant() const;
  /// Coefficient of the empty monomial.
  Rat constant_term() const;

  void add_term(const Monomial& m, const Rat& c);

  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o);
  RingElem& operator*=(const RingElem& o);
  RingElem& operator*=(const Rat& c);

  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  friend RingElem operator*(RingElem a, const Rat& c) { return a *= c; }
  friend RingElem operator*(const Rat& c, RingElem a) { return a *= c; }
  friend RingElem operator-(RingElem a) { return a *= Rat(-1); }

  friend bool operator==(const RingElem& a, const RingElem& b) {
    return a.family_ == b.family_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_family(const RingElem& o) const;

  GenFamily family_;
  Terms terms_;
};

RingElem pow(const RingElem& a, unsigned e);

/// Common grading weight of all monomials; nullopt when inhomogeneous.
/// Throws std::invalid_argument on zero (weight undefined).
std::optional<unsigned> ring_weight(const RingElem& a);

/// Ring homomorphism into `target` sending generator k to images.at(k).
RingElem ring_substitute(const RingElem& a, GenFamily target,
                         const std::map<unsigned, RingElem>& images);

/// Value with each generator replaced by its q-zeta partial sum up to N.
Rat ring_eval_numeric(const RingElem& a, const Rat& q, unsigned N);

/// zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!) as a multiple of (pi^2)^k.
RingElem zeta_even(unsigned k);
/// (1 - 4^{-k}) zeta(2k): the sum over odd integers only.
RingElem zeta_odd_even(unsigned k);

/// Images zeta_q(2k) -> zeta(2k) (or odd variants) for k = 1..max_k.
std::map<unsigned, RingElem> classical_images(GenFamily source, unsigned max_k);

/// Largest generator index occurring in a (0 for constants).
unsigned max_generator(const RingElem& a);

}  // namespace qvol
