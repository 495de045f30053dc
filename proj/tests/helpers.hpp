#pragma once

#include "qvol/volume_poly.hpp"

#include <initializer_list>
#include <random>
#include <utility>

namespace qvol::test {

inline Rat R(std::int64_t p, std::int64_t q = 1) { return make_rat(p, q); }

inline RingElem zq(unsigned k, unsigned e = 1) { return RingElem::generator(GenFamily::QZeta, k, e); }
inline RingElem zodd(unsigned k, unsigned e = 1) { return RingElem::generator(GenFamily::QZetaOdd, k, e); }
inline RingElem pi2(unsigned e = 1) { return RingElem::generator(GenFamily::PiSq, 1, e); }
inline RingElem konst(GenFamily f, const Rat& c) { return RingElem(f, c); }

inline VolumePoly poly(GenFamily f, unsigned arity,
                       std::initializer_list<std::pair<VolumePoly::Exponents, RingElem>> terms) {
  VolumePoly v(f, arity);
  for (const auto& [e, c] : terms) v.add_term(e, c);
  return v;
}

// Random element with small rational coefficients and generators 1..3.
inline RingElem random_elem(std::mt19937& rng, GenFamily f) {
  std::uniform_int_distribution<int> coeff(-9, 9), den(1, 5), gen(1, 3), ex(0, 2), nterms(0, 4);
  RingElem out(f);
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    RingElem m(f, make_rat(coeff(rng), den(rng)));
    for (unsigned k = 1; k <= (f == GenFamily::PiSq ? 1u : 3u); ++k) {
      const int e = ex(rng);
      if (e > 0) m *= RingElem::generator(f, k, static_cast<unsigned>(e));
    }
    out += m;
  }
  return out;
}

}  // namespace qvol::test
