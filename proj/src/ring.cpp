#include "qvol/ring.hpp"

#include "qvol/bernoulli.hpp"
#include "qvol/qzeta.hpp"

#include <stdexcept>
#include <string>

namespace qvol {

std::string_view family_name(GenFamily f) {
  switch (f) {
    case GenFamily::QZeta: return "q_zeta";
    case GenFamily::QZetaOdd: return "q_zeta_odd";
    case GenFamily::PiSq: return "pi_sq";
  }
  return "?";
}

GenFamily parse_family(std::string_view s) {
  if (s == "q_zeta") return GenFamily::QZeta;
  if (s == "q_zeta_odd") return GenFamily::QZetaOdd;
  if (s == "pi_sq") return GenFamily::PiSq;
  throw UsageError("unknown generator family '" + std::string(s) + "'");
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto i = a.begin(), j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

unsigned monomial_weight(const Monomial& m) {
  unsigned w = 0;
  for (auto [k, e] : m) w += 2 * k * e;
  return w;
}

RingElem::RingElem(GenFamily family, const Rat& constant) : family_(family) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

RingElem RingElem::generator(GenFamily family, unsigned k, unsigned exponent) {
  if (k == 0) throw std::invalid_argument("generator index must be positive");
  if (family == GenFamily::PiSq && k != 1)
    throw std::invalid_argument("pi_sq has a single generator");
  RingElem r(family);
  r.terms_.emplace(exponent == 0 ? Monomial{} : Monomial{{k, exponent}}, Rat(1));
  return r;
}

bool RingElem::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat RingElem::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rat(0) : it->second;
}

void RingElem::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void RingElem::require_same_family(const RingElem& o) const {
  if (family_ != o.family_)
    throw std::invalid_argument("ring family mismatch: " + std::string(family_name(family_)) +
                                " vs " + std::string(family_name(o.family_)));
}

RingElem& RingElem::operator+=(const RingElem& o) {
  require_same_family(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
  require_same_family(o);
  for (const auto& [m, c] : o.terms_) add_term(m, Rat(-c));
  return *this;
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  a.require_same_family(b);
  RingElem out(a.family_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_mul(ma, mb), Rat(ca * cb));
  return out;
}

RingElem& RingElem::operator*=(const RingElem& o) { return *this = *this * o; }

RingElem& RingElem::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

RingElem pow(const RingElem& a, unsigned e) {
  RingElem out(a.family(), Rat(1));
  for (unsigned i = 0; i < e; ++i) out *= a;
  return out;
}

std::optional<unsigned> ring_weight(const RingElem& a) {
  if (a.is_zero()) throw std::invalid_argument("weight of zero is undefined");
  std::optional<unsigned> w;
  for (const auto& [m, c] : a.terms()) {
    unsigned mw = monomial_weight(m);
    if (!w) {
      w = mw;
    } else if (*w != mw) {
      return std::nullopt;
    }
  }
  return w;
}

RingElem ring_substitute(const RingElem& a, GenFamily target,
                         const std::map<unsigned, RingElem>& images) {
  RingElem out(target);
  for (const auto& [m, c] : a.terms()) {
    RingElem term(target, c);
    for (auto [k, e] : m) {
      auto it = images.find(k);
      if (it == images.end())
        throw std::invalid_argument("no image for generator " + std::to_string(k));
      if (it->second.family() != target)
        throw std::invalid_argument("image family differs from substitution target");
      term *= pow(it->second, e);
    }
    out += term;
  }
  return out;
}

Rat ring_eval_numeric(const RingElem& a, const Rat& q, unsigned N) {
  require_unit_interval(q);
  if (a.family() == GenFamily::PiSq)
    throw std::invalid_argument("pi_sq elements have no q-series evaluation");
  const bool odd = a.family() == GenFamily::QZetaOdd;
  std::map<unsigned, Rat> values;
  Rat total = 0;
  for (const auto& [m, c] : a.terms()) {
    Rat term = c;
    for (auto [k, e] : m) {
      auto it = values.find(k);
      if (it == values.end())
        it = values.emplace(k, odd ? qzeta_odd_trunc(k, q, N) : qzeta_trunc(k, q, N)).first;
      term *= pow(it->second, static_cast<long>(e));
    }
    total += term;
  }
  return total;
}

RingElem zeta_even(unsigned k) {
  if (k == 0) throw std::invalid_argument("zeta_even needs k >= 1");
  // (2pi)^{2k} = 4^k (pi^2)^k
  Rat c = bernoulli(2 * k) * pow(Rat(4), static_cast<long>(k)) / Rat(2 * factorial(2 * k));
  if (k % 2 == 0) c = -c;
  RingElem out(GenFamily::PiSq);
  out.add_term(Monomial{{1, k}}, c);
  return out;
}

RingElem zeta_odd_even(unsigned k) {
  return zeta_even(k) * (1 - pow(Rat(4), -static_cast<long>(k)));
}

std::map<unsigned, RingElem> classical_images(GenFamily source, unsigned max_k) {
  if (source == GenFamily::PiSq) throw std::invalid_argument("source family is already classical");
  std::map<unsigned, RingElem> images;
  for (unsigned k = 1; k <= max_k; ++k)
    images.emplace(k, source == GenFamily::QZeta ? zeta_even(k) : zeta_odd_even(k));
  return images;
}

unsigned max_generator(const RingElem& a) {
  unsigned mx = 0;
  for (const auto& [m, c] : a.terms())
    if (!m.empty()) mx = std::max(mx, m.back().first);
  return mx;
}

}  // namespace qvol
