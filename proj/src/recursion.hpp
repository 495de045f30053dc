#pragma once

// Right-hand side of the kernel recursion, shared by the classical and super
// engines. A classical run is the m = 0 slice of the super bookkeeping.

#include "qvol/kernel.hpp"
#include "qvol/volume_poly.hpp"

#include <atomic>
#include <map>
#include <vector>

namespace qvol::detail {

/// 2g - 2 + n + m; everything at level <= 0 vanishes.
inline long level(unsigned g, unsigned n, unsigned m) {
  return 2 * static_cast<long>(g) - 2 + static_cast<long>(n) + static_cast<long>(m);
}

/// Polynomial in L_1..L_n with raw (not squared) exponents.
using RawPoly = std::map<std::vector<unsigned>, RingElem>;

inline void raw_add(RawPoly& p, const std::vector<unsigned>& e, const RingElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

/// L_1 * V(L_1..L_n) -> V; every L_1 power must be odd and every other power even.
inline VolumePoly divide_by_L1(const RawPoly& rhs, GenFamily fam, unsigned n) {
  VolumePoly out(fam, n);
  for (const auto& [e, c] : rhs) {
    if (e[0] % 2 == 0)
      throw ConsistencyError("recursion right side not divisible by L1 with even quotient");
    VolumePoly::Exponents a(n);
    a[0] = (e[0] - 1) / 2;
    for (unsigned i = 1; i < n; ++i) {
      if (e[i] % 2 != 0) throw ConsistencyError("odd power of a non-distinguished boundary");
      a[i] = e[i] / 2;
    }
    out.add_term(a, c);
  }
  return out;
}

/// Fetch(g, n, m) -> VolumePoly, only ever called with 1 <= level < level(g,n,m).
template <class Fetch>
VolumePoly recursion_step(Flavor flavor, unsigned g, unsigned n, unsigned m, Fetch&& fetch,
                          std::atomic<std::size_t>& divisions) {
  const GenFamily fam = ring_family(flavor);
  RawPoly rhs;
  const Rat half = make_rat(1, 2);

  // R-terms: sum_j int x R(L1, Lj, x) V_{g,n-1}(x, L_{K \ j}) dx
  if (n >= 2 && level(g, n - 1, m) >= 1) {
    const VolumePoly sub = fetch(g, n - 1, m);
    for (unsigned j = 1; j < n; ++j) {
      std::vector<unsigned> others;
      for (unsigned i = 1; i < n; ++i)
        if (i != j) others.push_back(i);
      for (const auto& [e, c] : sub.terms()) {
        const BiPoly rint = r_integral(flavor, e[0]);
        std::vector<unsigned> raw(n, 0);
        for (std::size_t t = 0; t < others.size(); ++t) raw[others[t]] = 2 * e[t + 1];
        for (const auto& [pe, rc] : rint.terms()) {
          raw[0] = pe.first;
          raw[j] = pe.second;
          raw_add(rhs, raw, rc * c);
        }
      }
    }
  }

  // D-term, genus reduction: (1/2) int int xy D(L1,x,y) V_{g-1,n+1}(x,y,L_K)
  if (g >= 1 && level(g - 1, n + 1, m) >= 1) {
    const VolumePoly sub = fetch(g - 1, n + 1, m);
    for (const auto& [e, c] : sub.terms()) {
      const UniPoly dint = d_integral(flavor, e[0], e[1]);
      std::vector<unsigned> raw(n, 0);
      for (unsigned t = 1; t < n; ++t) raw[t] = 2 * e[t + 1];
      const RingElem hc = c * half;
      for (const auto& [p, dc] : dint.terms()) {
        raw[0] = p;
        raw_add(rhs, raw, dc * hc);
      }
    }
  }

  // D-term, ordered splittings (g1, I) (g2, J), binomial convolution in s.
  const unsigned k = n - 1;  // |K|
  for (unsigned g1 = 0; g1 <= g; ++g1) {
    const unsigned g2 = g - g1;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<unsigned> I, J;
      for (unsigned t = 0; t < k; ++t) ((mask >> t) & 1u ? I : J).push_back(t + 1);
      const unsigned nI = static_cast<unsigned>(I.size()) + 1;
      const unsigned nJ = static_cast<unsigned>(J.size()) + 1;
      for (unsigned m1 = 0; m1 <= m; ++m1) {
        const unsigned m2 = m - m1;
        if (level(g1, nI, m1) < 1 || level(g2, nJ, m2) < 1) continue;
        const VolumePoly A = fetch(g1, nI, m1);
        if (A.is_zero()) continue;
        const VolumePoly B = fetch(g2, nJ, m2);
        if (B.is_zero()) continue;
        const Rat weight = Rat(binomial(m, m1)) * half;
        std::vector<unsigned> raw(n, 0);
        for (const auto& [ea, ca] : A.terms()) {
          for (std::size_t t = 0; t < I.size(); ++t) raw[I[t]] = 2 * ea[t + 1];
          const RingElem wa = ca * weight;
          for (const auto& [eb, cb] : B.terms()) {
            for (std::size_t t = 0; t < J.size(); ++t) raw[J[t]] = 2 * eb[t + 1];
            const UniPoly dint = d_integral(flavor, ea[0], eb[0]);
            const RingElem ab = wa * cb;
            for (const auto& [p, dc] : dint.terms()) {
              raw[0] = p;
              raw_add(rhs, raw, dc * ab);
            }
          }
        }
      }
    }
  }

  ++divisions;
  return divide_by_L1(rhs, fam, n);
}

}  // namespace qvol::detail
