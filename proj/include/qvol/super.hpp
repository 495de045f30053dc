#pragma once

// Super recursion driver. A super volume is the series
//   V_{g,n}(L; s) = sum_m s^m/m! V^{(m)}_{g,n}(L),
// computed part by part in order of the level 2g-2+n+m. Initial data:
// V^{(2)}_{0,1} = 1 and V^{(0)}_{1,1} = 1/8; everything at level <= 0 is zero.

#include "qvol/kernel.hpp"
#include "qvol/memo.hpp"
#include "qvol/volume_poly.hpp"

#include <atomic>
#include <map>
#include <tuple>

namespace qvol {

struct SuperSeries {
  Flavor flavor = Flavor::QSuper;
  unsigned g = 0;
  unsigned n = 1;
  unsigned m_max = 0;
  std::map<unsigned, VolumePoly> parts;  // every m in [0, m_max]

  const VolumePoly& part(unsigned m) const { return parts.at(m); }

  friend bool operator==(const SuperSeries&, const SuperSeries&) = default;
};

/// 2g - 2 + m, the weight of the s^m/m! part.
long super_weight(unsigned g, unsigned m);

class SuperEngine {
 public:
  explicit SuperEngine(Flavor flavor);
  SuperEngine(const SuperEngine&) = delete;
  SuperEngine& operator=(const SuperEngine&) = delete;

  Flavor flavor() const { return flavor_; }

  /// Requires n >= 1. Thread-safe.
  SuperSeries super_volume(unsigned g, unsigned n, unsigned m_max);
  VolumePoly part(unsigned g, unsigned n, unsigned m);

  std::size_t divisions_checked() const { return divisions_.load(); }
  /// Number of sub-volume fetches whose level was verified to be smaller.
  std::size_t level_checks() const { return level_checks_.load(); }

 private:
  VolumePoly compute(unsigned g, unsigned n, unsigned m);

  Flavor flavor_;
  MemoCache<std::tuple<unsigned, unsigned, unsigned>, VolumePoly> memo_;
  std::atomic<std::size_t> divisions_{0};
  std::atomic<std::size_t> level_checks_{0};
};

SuperEngine& super_engine(Flavor flavor);
SuperSeries super_volume(Flavor flavor, unsigned g, unsigned n, unsigned m_max);

/// zeta^odd_q(2k) -> zeta^odd(2k) part by part; rejects inhomogeneous parts.
SuperSeries super_limit(const SuperSeries& ss);

}  // namespace qvol
