#include "qvol/volume.hpp"

#include "recursion.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace qvol {

unsigned classical_weight(unsigned g, unsigned n) { return 6 * g + 2 * n - 6; }

VolumeEngine::VolumeEngine(Flavor flavor) : flavor_(flavor) {
  if (is_super(flavor)) throw std::invalid_argument("VolumeEngine needs a classical flavor");
}

VolumePoly VolumeEngine::volume(unsigned g, unsigned n) {
  if (n == 0 || detail::level(g, n, 0) < 1)
    throw UsageError("unstable (g,n) = (" + std::to_string(g) + "," + std::to_string(n) +
                     "): need n >= 1 and 2g-2+n >= 1");
  return get(g, n);
}

VolumePoly VolumeEngine::get(unsigned g, unsigned n) {
  if (detail::level(g, n, 0) < 1) return VolumePoly(ring_family(flavor_), n);
  return memo_.get_or_compute({g, n}, [&] { return compute(g, n); });
}

VolumePoly VolumeEngine::compute(unsigned g, unsigned n) {
  if (g == 0 && n == 3) return VolumePoly::constant(ring_family(flavor_), 3, Rat(1));
  if (g == 1 && n == 1) return v11_base(flavor_);
  const long lvl = detail::level(g, n, 0);
  auto fetch = [&](unsigned g2, unsigned n2, unsigned m2) {
    if (m2 != 0 || detail::level(g2, n2, 0) >= lvl)
      throw ConsistencyError("classical recursion referenced a non-smaller level");
    return get(g2, n2);
  };
  return detail::recursion_step(flavor_, g, n, 0, fetch, divisions_);
}

VolumeEngine& volume_engine(Flavor flavor) {
  static VolumeEngine q(Flavor::QClassical);
  static VolumeEngine wp(Flavor::WpClassical);
  switch (flavor) {
    case Flavor::QClassical: return q;
    case Flavor::WpClassical: return wp;
    default: throw std::invalid_argument("no classical engine for a super flavor");
  }
}

VolumePoly volume(Flavor flavor, unsigned g, unsigned n) {
  return volume_engine(flavor).volume(g, n);
}

std::optional<unsigned> homogeneous_weight(const VolumePoly& v) {
  if (v.is_zero()) return std::nullopt;
  const auto& [e, c] = *v.terms().begin();
  unsigned w = monomial_weight(c.terms().begin()->first);
  for (unsigned a : e) w += 2 * a;
  if (!check_homogeneity(v, w)) return std::nullopt;
  return w;
}

VolumePoly classical_limit(const VolumePoly& v) {
  if (v.family() != GenFamily::QZeta)
    throw std::invalid_argument("classical_limit expects q-zeta coefficients");
  if (!v.is_zero() && !homogeneous_weight(v))
    throw std::invalid_argument("classical_limit needs a homogeneous polynomial");
  return substitute(v, GenFamily::PiSq, classical_images(GenFamily::QZeta, max_generator(v)));
}

}  // namespace qvol
