#include "qvol/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace qvol {

Rat bernoulli(unsigned n) {
  static std::mutex mu;
  static std::vector<Rat> table{Rat(1)};
  std::lock_guard lock(mu);
  while (table.size() <= n) {
    const unsigned m = static_cast<unsigned>(table.size());
    Rat acc = 0;
    for (unsigned k = 0; k < m; ++k) acc += Rat(binomial(m + 1, k)) * table[k];
    table.push_back(Rat(-acc / (m + 1)));
  }
  return table[n];
}

}  // namespace qvol
