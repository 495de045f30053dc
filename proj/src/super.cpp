#include "qvol/super.hpp"

#include "recursion.hpp"

#include <stdexcept>
#include <string>

namespace qvol {

long super_weight(unsigned g, unsigned m) {
  return 2 * static_cast<long>(g) - 2 + static_cast<long>(m);
}

SuperEngine::SuperEngine(Flavor flavor) : flavor_(flavor) {
  if (!is_super(flavor)) throw std::invalid_argument("SuperEngine needs a super flavor");
}

SuperSeries SuperEngine::super_volume(unsigned g, unsigned n, unsigned m_max) {
  if (n == 0) throw UsageError("super volumes need n >= 1");
  SuperSeries ss{flavor_, g, n, m_max, {}};
  for (unsigned m = 0; m <= m_max; ++m) ss.parts.emplace(m, part(g, n, m));
  return ss;
}

VolumePoly SuperEngine::part(unsigned g, unsigned n, unsigned m) {
  if (detail::level(g, n, m) < 1) return VolumePoly(ring_family(flavor_), n);
  return memo_.get_or_compute({g, n, m}, [&] { return compute(g, n, m); });
}

VolumePoly SuperEngine::compute(unsigned g, unsigned n, unsigned m) {
  const GenFamily fam = ring_family(flavor_);
  if (g == 0 && n == 1 && m == 2) return VolumePoly::constant(fam, 1, Rat(1));
  if (g == 1 && n == 1 && m == 0) return VolumePoly::constant(fam, 1, make_rat(1, 8));
  const long lvl = detail::level(g, n, m);
  auto fetch = [&](unsigned g2, unsigned n2, unsigned m2) {
    ++level_checks_;
    if (detail::level(g2, n2, m2) >= lvl)
      throw ConsistencyError("super recursion referenced a non-smaller level");
    return part(g2, n2, m2);
  };
  return detail::recursion_step(flavor_, g, n, m, fetch, divisions_);
}

SuperEngine& super_engine(Flavor flavor) {
  static SuperEngine q(Flavor::QSuper);
  static SuperEngine wp(Flavor::WpSuper);
  switch (flavor) {
    case Flavor::QSuper: return q;
    case Flavor::WpSuper: return wp;
    default: throw std::invalid_argument("no super engine for a classical flavor");
  }
}

SuperSeries super_volume(Flavor flavor, unsigned g, unsigned n, unsigned m_max) {
  return super_engine(flavor).super_volume(g, n, m_max);
}

SuperSeries super_limit(const SuperSeries& ss) {
  if (ss.flavor != Flavor::QSuper) throw std::invalid_argument("super_limit expects a q-super series");
  SuperSeries out{Flavor::WpSuper, ss.g, ss.n, ss.m_max, {}};
  for (const auto& [m, p] : ss.parts) {
    const long w = super_weight(ss.g, m);
    if (!p.is_zero() && (w < 0 || !check_homogeneity(p, static_cast<unsigned>(w))))
      throw std::invalid_argument("super_limit: part m=" + std::to_string(m) + " is not homogeneous");
    out.parts.emplace(m, substitute(p, GenFamily::PiSq,
                                    classical_images(GenFamily::QZetaOdd, max_generator(p))));
  }
  return out;
}

}  // namespace qvol
