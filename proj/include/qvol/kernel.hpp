#pragma once

// Moment polynomials of the recursion kernels. Every integral in the volume
// recursions reduces to the F-polynomials F_{2k+1}(y) = int_0^inf x^{2k+1} H(x,y) dx,
// whose coefficients come from a flavor-dependent b-stream:
//
//   q classical   b_n = 4^n  s_n(zeta_q(2), zeta_q(4), ...)
//   q super       b_n = 16^n s_n(zeta^odd_q(2), zeta^odd_q(4), ...)
//   WP classical  sum b_n z^{2n} = 2 pi z / sin(2 pi z)
//   WP super      sum b_n z^{2n} = 1 / cos(2 pi z)
//
// Classical kernels carry an extra antiderivative in L_1 (zero at L_1 = 0);
// super kernels do not.

#include "qvol/ring.hpp"
#include "qvol/volume_poly.hpp"

#include <deque>
#include <mutex>
#include <span>
#include <string_view>
#include <vector>

namespace qvol {

enum class Flavor { QClassical, QSuper, WpClassical, WpSuper };

bool is_super(Flavor f);
bool is_q(Flavor f);
GenFamily ring_family(Flavor f);
/// CLI spelling: "q", "qsuper", "wp", "wpsuper".
std::string_view flavor_name(Flavor f);
Flavor parse_flavor(std::string_view s);
/// The WP flavor a q flavor tends to under the rescaled q -> 1 limit.
Flavor limit_flavor(Flavor f);

/// s_0..s_{k_max} from exp(sum_m p_m t^m / m) = sum_k s_k t^k, via
/// k s_k = sum_{m=1}^{k} p_m s_{k-m}. `p[m-1]` holds p_m; needs p.size() >= k_max.
/// T is any commutative Q-algebra value (Rat, RingElem).
template <class T>
std::vector<T> schur_s_upto(unsigned k_max, std::span<const T> p, const T& one) {
  std::vector<T> s;
  s.reserve(k_max + 1);
  s.push_back(one);
  for (unsigned k = 1; k <= k_max; ++k) {
    T acc = one * Rat(0);
    for (unsigned m = 1; m <= k; ++m) acc += p[m - 1] * s[k - m];
    s.push_back(acc * make_rat(1, k));
  }
  return s;
}

/// s_k (zero for k < 0).
template <class T>
T schur_s(int k, std::span<const T> p, const T& one) {
  if (k < 0) return one * Rat(0);
  return schur_s_upto<T>(static_cast<unsigned>(k), p, one).back();
}

/// s_k as a polynomial in the generators of `family`, with p_m = generator m.
RingElem schur_s_symbolic(int k, GenFamily family);

/// Append-only, internally synchronized b-coefficient sequence for one flavor.
class BStream {
 public:
  explicit BStream(Flavor flavor);
  BStream(const BStream&) = delete;
  BStream& operator=(const BStream&) = delete;

  Flavor flavor() const { return flavor_; }
  RingElem at(unsigned n) const;

 private:
  void extend_to(unsigned n) const;

  Flavor flavor_;
  mutable std::mutex mu_;
  mutable std::deque<RingElem> b_;
  mutable std::deque<RingElem> aux_;  // s_n (q flavors) or series to invert (WP flavors)
};

/// Process-wide stream of the given flavor.
const BStream& stream(Flavor flavor);
RingElem b_stream(Flavor flavor, unsigned n);

/// WP b-streams computed instead as c^n s_n(zeta(2), zeta(4), ...) (c = 4 classical,
/// c = 16 super with odd zeta values); independent of the series inversion.
RingElem b_stream_via_zeta(Flavor wp_flavor, unsigned n);

/// F_{2k+1}(y), not divided by (2k+1)!.
UniPoly f_poly(Flavor flavor, unsigned k);

/// int_0^inf z^{2k+1} R(L1, Lj, z) dz as a polynomial in (L1, Lj).
BiPoly r_integral(Flavor flavor, unsigned k);

/// int int y^{2i+1} z^{2j+1} D(L1, y, z) dy dz as a polynomial in L1.
UniPoly d_integral(Flavor flavor, unsigned i, unsigned j);

/// V_{1,1}(L) = (1/(8L)) int_0^L F_1(t) dt for classical flavors.
VolumePoly v11_base(Flavor flavor);

}  // namespace qvol
