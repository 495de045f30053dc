#include "qvol/qzeta.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace qvol {

void require_unit_interval(const Rat& q) {
  if (q <= 0 || q >= 1) throw std::domain_error("q must lie in (0,1), got " + to_string(q));
}

namespace {

Rat qzeta_sum_uncached(unsigned k, const Rat& q, unsigned N, unsigned step) {
  Rat sum = 0;
  const Rat qk = pow(q, k);
  Rat qm = q;            // q^m
  Rat qmk = qk;          // q^{mk}
  const Rat q_step = pow(q, step);
  const Rat qk_step = pow(qk, step);
  for (unsigned m = 1; m <= N; m += step) {
    Rat one_minus = 1 - qm;
    sum += qmk / pow(one_minus, 2 * static_cast<long>(k));
    qm *= q_step;
    qmk *= qk_step;
  }
  return sum;
}

// The oracles evaluate the same partial sums for every polynomial coefficient;
// with large N the exact sums dominate, so they are kept per (k, q, N, step).
Rat qzeta_sum(unsigned k, const Rat& q, unsigned N, unsigned step) {
  require_unit_interval(q);
  if (k == 0) throw std::domain_error("q-zeta index must be positive");
  using Key = std::tuple<unsigned, std::string, unsigned, unsigned>;
  static std::mutex mu;
  static std::map<Key, Rat> memo;
  Key key{k, to_string(q), N, step};
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  Rat v = qzeta_sum_uncached(k, q, N, step);
  std::lock_guard lock(mu);
  return memo.try_emplace(std::move(key), std::move(v)).first->second;
}

}  // namespace

Rat qzeta_trunc(unsigned k, const Rat& q, unsigned N) { return qzeta_sum(k, q, N, 1); }

Rat qzeta_odd_trunc(unsigned k, const Rat& q, unsigned N) { return qzeta_sum(k, q, N, 2); }

}  // namespace qvol
