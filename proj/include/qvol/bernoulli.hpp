#pragma once

#include "qvol/rat.hpp"

namespace qvol {

/// B_n with B_1 = -1/2, from sum_{k=0}^{n} C(n+1,k) B_k = 0. Memoized; thread-safe.
Rat bernoulli(unsigned n);

}  // namespace qvol
