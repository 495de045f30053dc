#include "qvol/volume_poly.hpp"

#include <stdexcept>

namespace qvol {

bool UniPoly::is_even() const {
  for (const auto& [e, c] : terms_)
    if (e % 2 != 0) return false;
  return true;
}

bool UniPoly::is_odd() const {
  for (const auto& [e, c] : terms_)
    if (e % 2 == 0) return false;
  return true;
}

RingElem UniPoly::coeff(unsigned e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? RingElem(family_) : it->second;
}

void UniPoly::add_term(unsigned e, const RingElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UniPoly& UniPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, v] : terms_) v *= c;
  }
  return *this;
}

UniPoly UniPoly::integrate() const {
  UniPoly out(family_);
  for (const auto& [e, c] : terms_) out.add_term(e + 1, c * make_rat(1, e + 1));
  return out;
}

std::optional<unsigned> total_weight(const UniPoly& p) {
  std::optional<unsigned> w;
  for (const auto& [e, c] : p.terms()) {
    for (const auto& [m, r] : c.terms()) {
      unsigned tw = e + monomial_weight(m);
      if (!w) {
        w = tw;
      } else if (*w != tw) {
        return std::nullopt;
      }
    }
  }
  return w;
}

void BiPoly::add_term(Key e, const RingElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

VolumePoly VolumePoly::constant(GenFamily family, unsigned arity, const Rat& c) {
  VolumePoly v(family, arity);
  v.add_term(Exponents(arity, 0), RingElem(family, c));
  return v;
}

RingElem VolumePoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? RingElem(family_) : it->second;
}

void VolumePoly::add_term(const Exponents& e, const RingElem& c) {
  if (e.size() != arity_) throw std::invalid_argument("exponent vector has wrong arity");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

VolumePoly& VolumePoly::operator+=(const VolumePoly& o) {
  if (o.arity_ != arity_ || o.family_ != family_)
    throw std::invalid_argument("adding volume polynomials of different shape");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

VolumePoly& VolumePoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, v] : terms_) v *= c;
  }
  return *this;
}

bool check_symmetry(const VolumePoly& v) {
  // adjacent transpositions generate the symmetric group
  for (const auto& [e, c] : v.terms()) {
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
      if (e[i] == e[i + 1]) continue;
      auto swapped = e;
      std::swap(swapped[i], swapped[i + 1]);
      auto it = v.terms().find(swapped);
      if (it == v.terms().end() || !(it->second == c)) return false;
    }
  }
  return true;
}

bool check_homogeneity(const VolumePoly& v, unsigned weight) {
  for (const auto& [e, c] : v.terms()) {
    unsigned lw = 0;
    for (unsigned a : e) lw += 2 * a;
    for (const auto& [m, r] : c.terms())
      if (lw + monomial_weight(m) != weight) return false;
  }
  return true;
}

VolumePoly substitute(const VolumePoly& v, GenFamily target,
                      const std::map<unsigned, RingElem>& images) {
  VolumePoly out(target, v.arity());
  for (const auto& [e, c] : v.terms()) out.add_term(e, ring_substitute(c, target, images));
  return out;
}

unsigned max_generator(const VolumePoly& v) {
  unsigned mx = 0;
  for (const auto& [e, c] : v.terms()) mx = std::max(mx, max_generator(c));
  return mx;
}

VolumePoly constant_ring_part(const VolumePoly& v) {
  VolumePoly out(v.family(), v.arity());
  for (const auto& [e, c] : v.terms()) {
    Rat k = c.constant_term();
    if (k != 0) out.add_term(e, RingElem(v.family(), k));
  }
  return out;
}

}  // namespace qvol
