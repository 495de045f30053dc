#pragma once

// Classical recursion driver: q-deformed volumes V_{g,n} (QClassical) and
// Weil-Petersson volumes (WpClassical), from V_{0,3} = 1 and V_{1,1}.

#include "qvol/kernel.hpp"
#include "qvol/memo.hpp"
#include "qvol/volume_poly.hpp"

#include <atomic>
#include <utility>

namespace qvol {

/// 6g - 6 + 2n.
unsigned classical_weight(unsigned g, unsigned n);

class VolumeEngine {
 public:
  explicit VolumeEngine(Flavor flavor);
  VolumeEngine(const VolumeEngine&) = delete;
  VolumeEngine& operator=(const VolumeEngine&) = delete;

  Flavor flavor() const { return flavor_; }

  /// Requires n >= 1 and 2g - 2 + n >= 1 (UsageError otherwise). Thread-safe.
  VolumePoly volume(unsigned g, unsigned n);

  /// Number of recursion right sides assembled and divided exactly by L_1.
  std::size_t divisions_checked() const { return divisions_.load(); }
  std::size_t cached() const { return memo_.size(); }

 private:
  VolumePoly get(unsigned g, unsigned n);
  VolumePoly compute(unsigned g, unsigned n);

  Flavor flavor_;
  MemoCache<std::pair<unsigned, unsigned>, VolumePoly> memo_;
  std::atomic<std::size_t> divisions_{0};
};

/// Shared engine of a classical flavor.
VolumeEngine& volume_engine(Flavor flavor);
VolumePoly volume(Flavor flavor, unsigned g, unsigned n);

/// zeta_q(2k) -> zeta(2k). Rejects inhomogeneous input (std::invalid_argument).
VolumePoly classical_limit(const VolumePoly& v);

/// Weight shared by all terms; nullopt for zero or inhomogeneous polynomials.
std::optional<unsigned> homogeneous_weight(const VolumePoly& v);

}  // namespace qvol
