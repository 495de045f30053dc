#pragma once

// Numeric verification of the q-series identities behind the kernels, in exact
// rational arithmetic at rational q. "Tolerance" is always a proven bound on
// the omitted tail, never a floating-point epsilon.

#include "qvol/kernel.hpp"
#include "qvol/qzeta.hpp"
#include "qvol/rat.hpp"

#include <string>
#include <vector>

namespace qvol {

/// Truncation point for a q-series check.
struct Truncation {
  Rat q;        // in (0,1)
  unsigned N;   // number of summation terms kept

  /// q = r^2 (oracles that need q^{m/2} = r^m rational).
  static Truncation from_root(const Rat& r, unsigned N) { return {Rat(r * r), N}; }
};

struct IdentityReport {
  int k = 0;
  Rat q;
  unsigned N = 0;
  Rat lhs;
  Rat rhs;
  Rat discrepancy;  // |lhs - rhs|
  Rat budget;       // proven bound on |lhs - rhs| from truncation
  bool pass = false;
};

/// psi(q) = sum_{j>=0} q^{j(j+1)/2}, first N terms.
Rat psi_trunc(const Rat& q, unsigned N);
/// Upper bound on the omitted tail of psi_trunc(q, N).
Rat psi_tail(const Rat& q, unsigned N);

/// Upper bounds on zeta_q(2j) - qzeta_trunc(j, q, N) (resp. odd variant).
Rat qzeta_tail(unsigned j, const Rat& q, unsigned N);
Rat qzeta_odd_tail(unsigned j, const Rat& q, unsigned N);

/// sum_{m<=N} (-1)^{m-1} q^{m(m-1)/2} (1+q^m) q^{mk} / (1-q^m)^{2k}, and a tail bound.
Rat qident_lhs(int k, const Rat& q, unsigned N);
Rat qident_lhs_tail(int k, const Rat& q, unsigned N);

/// sum_{odd m<=N} (-1)^{(m-1)/2} q^{(m^2-1)/4} (1+q^m) q^{mk} / (1-q^m)^{2k+1}, and tail.
Rat qident_odd_lhs(int k, const Rat& q, unsigned N);
Rat qident_odd_lhs_tail(int k, const Rat& q, unsigned N);

/// Smallest N accepted by the tail bounds for index k (bounds need N >= |k| etc.).
unsigned min_truncation(int k, bool odd);

IdentityReport verify_qident(int k, const Truncation& trunc);
IdentityReport verify_qident_odd(int k, const Truncation& trunc);

/// Doubles N from a small start until budget <= target (or max_N is exceeded,
/// in which case the last report is returned with pass = false).
IdentityReport verify_qident_to(int k, const Rat& q, const Rat& target, bool odd,
                                unsigned max_N = 4096);

/// Termwise-integrated F_{2k+1}(y) from the kernel series with q = r^2, first N
/// terms (QClassical or QSuper).
Rat f_oracle(Flavor flavor, unsigned k, const Rat& y, const Rat& r, unsigned N);

struct OracleReport {
  Flavor flavor = Flavor::QClassical;
  unsigned k = 0;
  Rat y;
  Rat r;
  unsigned N = 0;
  Rat oracle;
  Rat symbolic;     // f_poly(flavor, k)(y) with generators as partial sums at q = r^2
  Rat discrepancy;
  Rat budget;       // oracle tail + symbolic tail
  bool pass = false;
};

OracleReport compare_f_oracle(Flavor flavor, unsigned k, const Rat& y, const Rat& r, unsigned N);
OracleReport compare_f_oracle_to(Flavor flavor, unsigned k, const Rat& y, const Rat& r,
                                 const Rat& target, unsigned max_N = 4096);

/// Value of a UniPoly at y with generators replaced by partial sums at q.
Rat eval_numeric(const UniPoly& p, const Rat& y, const Rat& q, unsigned N);

struct TrendReport {
  Rat x;
  Rat y;
  bool super = false;
  unsigned precision = 60;               // decimal digits
  std::vector<Rat> r;                    // q = r^2
  std::vector<std::string> discrepancy;  // decimal strings
  bool strictly_decreasing = false;
};

/// |H_q(x/(1-q), y/(1-q)) - H(x,y)| for each r in r_sequence (q = r^2), evaluated
/// in `digits`-digit real arithmetic. The super variant compares
/// (1-q)^{-1} Hhat_q(x/(1-q), y/(1-q)) with Hhat(x,y). Needs x >= |y|.
/// Throws std::runtime_error when a discrepancy falls below the working precision.
TrendReport kernel_limit_trend(const Rat& x, const Rat& y, const std::vector<Rat>& r_sequence,
                               unsigned digits = 60, bool super = false);

/// The limit kernels at a point, as decimal strings (for tests and reports).
std::string limit_kernel_value(const Rat& x, const Rat& y, unsigned digits, bool super);

}  // namespace qvol
