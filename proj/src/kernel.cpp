#include "qvol/kernel.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

namespace qvol {

bool is_super(Flavor f) { return f == Flavor::QSuper || f == Flavor::WpSuper; }
bool is_q(Flavor f) { return f == Flavor::QClassical || f == Flavor::QSuper; }

GenFamily ring_family(Flavor f) {
  switch (f) {
    case Flavor::QClassical: return GenFamily::QZeta;
    case Flavor::QSuper: return GenFamily::QZetaOdd;
    default: return GenFamily::PiSq;
  }
}

std::string_view flavor_name(Flavor f) {
  switch (f) {
    case Flavor::QClassical: return "q";
    case Flavor::QSuper: return "qsuper";
    case Flavor::WpClassical: return "wp";
    case Flavor::WpSuper: return "wpsuper";
  }
  return "?";
}

Flavor parse_flavor(std::string_view s) {
  if (s == "q") return Flavor::QClassical;
  if (s == "qsuper") return Flavor::QSuper;
  if (s == "wp") return Flavor::WpClassical;
  if (s == "wpsuper") return Flavor::WpSuper;
  throw UsageError("unknown flavor '" + std::string(s) + "' (expected q|wp|qsuper|wpsuper)");
}

Flavor limit_flavor(Flavor f) {
  switch (f) {
    case Flavor::QClassical: return Flavor::WpClassical;
    case Flavor::QSuper: return Flavor::WpSuper;
    default: return f;
  }
}

RingElem schur_s_symbolic(int k, GenFamily family) {
  const RingElem one(family, Rat(1));
  if (k < 0) return RingElem(family);
  std::vector<RingElem> p;
  for (int m = 1; m <= k; ++m)
    p.push_back(family == GenFamily::PiSq ? pow(RingElem::generator(family, 1), m)
                                          : RingElem::generator(family, m));
  return schur_s<RingElem>(k, p, one);
}

BStream::BStream(Flavor flavor) : flavor_(flavor) {
  const GenFamily fam = ring_family(flavor);
  b_.emplace_back(fam, Rat(1));
  aux_.emplace_back(fam, Rat(1));
}

void BStream::extend_to(unsigned n) const {
  const GenFamily fam = ring_family(flavor_);
  while (b_.size() <= n) {
    const unsigned k = static_cast<unsigned>(b_.size());
    switch (flavor_) {
      case Flavor::QClassical:
      case Flavor::QSuper: {
        // aux_ holds s_0..s_{k-1} in the generators.
        RingElem acc(fam);
        for (unsigned m = 1; m <= k; ++m) acc += RingElem::generator(fam, m) * aux_[k - m];
        acc *= make_rat(1, k);
        aux_.push_back(acc);
        const long base = flavor_ == Flavor::QClassical ? 4 : 16;
        b_.push_back(acc * pow(Rat(base), static_cast<long>(k)));
        break;
      }
      case Flavor::WpClassical:
      case Flavor::WpSuper: {
        // aux_[j] = z^{2j} coefficient of sin(2 pi z)/(2 pi z) or cos(2 pi z);
        // b = 1/aux via b_k = -sum_{j=1}^k aux_j b_{k-j}.
        const unsigned den = flavor_ == Flavor::WpClassical ? 2 * k + 1 : 2 * k;
        Rat a = pow(Rat(4), static_cast<long>(k)) / Rat(factorial(den));
        if (k % 2 == 1) a = -a;
        RingElem term(fam);
        term.add_term(Monomial{{1, k}}, a);
        aux_.push_back(term);
        RingElem acc(fam);
        for (unsigned j = 1; j <= k; ++j) acc -= aux_[j] * b_[k - j];
        b_.push_back(acc);
        break;
      }
    }
  }
}

RingElem BStream::at(unsigned n) const {
  std::lock_guard lock(mu_);
  extend_to(n);
  return b_[n];
}

const BStream& stream(Flavor flavor) {
  static const std::array<BStream, 4> streams{BStream(Flavor::QClassical),
                                              BStream(Flavor::QSuper),
                                              BStream(Flavor::WpClassical),
                                              BStream(Flavor::WpSuper)};
  return streams[static_cast<std::size_t>(flavor)];
}

RingElem b_stream(Flavor flavor, unsigned n) { return stream(flavor).at(n); }

RingElem b_stream_via_zeta(Flavor wp_flavor, unsigned n) {
  if (wp_flavor != Flavor::WpClassical && wp_flavor != Flavor::WpSuper)
    throw std::invalid_argument("b_stream_via_zeta needs a WP flavor");
  const bool super = wp_flavor == Flavor::WpSuper;
  std::vector<RingElem> p;
  for (unsigned m = 1; m <= n; ++m) p.push_back(super ? zeta_odd_even(m) : zeta_even(m));
  RingElem s = schur_s<RingElem>(static_cast<int>(n), p, RingElem(GenFamily::PiSq, Rat(1)));
  return s * pow(Rat(super ? 16 : 4), static_cast<long>(n));
}

namespace {

// Memo tables shared by all callers; kernel values are immutable once built.
template <class Key, class Value>
class KernelTable {
 public:
  template <class Fn>
  Value get(const Key& key, Fn&& build) {
    {
      std::lock_guard lock(mu_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    Value v = build();
    std::lock_guard lock(mu_);
    return table_.try_emplace(key, std::move(v)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<Key, Value> table_;
};

UniPoly build_f_poly(Flavor flavor, unsigned k) {
  const GenFamily fam = ring_family(flavor);
  const Rat lead(factorial(2 * k + 1));
  UniPoly f(fam);
  if (is_super(flavor)) {
    for (unsigned n = 0; n <= k; ++n) {
      const unsigned e = 2 * k + 1 - 2 * n;
      f.add_term(e, b_stream(flavor, n) * Rat(lead / Rat(factorial(e))));
    }
  } else {
    for (unsigned n = 0; n <= k + 1; ++n) {
      const unsigned e = 2 * k + 2 - 2 * n;
      f.add_term(e, b_stream(flavor, n) * Rat(lead / Rat(factorial(e))));
    }
  }
  return f;
}

}  // namespace

UniPoly f_poly(Flavor flavor, unsigned k) {
  static KernelTable<std::pair<Flavor, unsigned>, UniPoly> table;
  return table.get({flavor, k}, [&] { return build_f_poly(flavor, k); });
}

BiPoly r_integral(Flavor flavor, unsigned k) {
  static KernelTable<std::pair<Flavor, unsigned>, BiPoly> table;
  return table.get({flavor, k}, [&] {
    // (F(t+Lj) + F(t-Lj))/2 = sum_e f_e sum_{i even} C(e,i) t^{e-i} Lj^i
    const UniPoly f = f_poly(flavor, k);
    const bool antiderivative = !is_super(flavor);
    BiPoly out(f.family());
    for (const auto& [e, c] : f.terms()) {
      for (unsigned i = 0; i <= e; i += 2) {
        const unsigned t = e - i;
        Rat coef(binomial(e, i));
        if (antiderivative) coef /= t + 1;
        out.add_term({antiderivative ? t + 1 : t, i}, c * coef);
      }
    }
    return out;
  });
}

UniPoly d_integral(Flavor flavor, unsigned i, unsigned j) {
  static KernelTable<std::tuple<Flavor, unsigned, unsigned>, UniPoly> table;
  if (i > j) std::swap(i, j);
  return table.get({flavor, i, j}, [&] {
    const Rat ratio = Rat(factorial(2 * i + 1) * factorial(2 * j + 1)) /
                      Rat(factorial(2 * i + 2 * j + 3));
    UniPoly f = f_poly(flavor, i + j + 1);
    if (!is_super(flavor)) f = f.integrate();
    f *= ratio;
    return f;
  });
}

VolumePoly v11_base(Flavor flavor) {
  if (is_super(flavor))
    throw std::invalid_argument("v11_base is defined for classical flavors only");
  const UniPoly integral = f_poly(flavor, 0).integrate();
  VolumePoly v(ring_family(flavor), 1);
  for (const auto& [e, c] : integral.terms()) {
    // e is odd; divide by 8L
    v.add_term({(e - 1) / 2}, c * make_rat(1, 8));
  }
  return v;
}

}  // namespace qvol
