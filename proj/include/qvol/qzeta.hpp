#pragma once

#include "qvol/rat.hpp"

namespace qvol {

/// Partial sum of zeta_q(2k) = sum_{m>=1} q^{mk}/(1-q^m)^{2k} over m <= N.
Rat qzeta_trunc(unsigned k, const Rat& q, unsigned N);

/// Same sum restricted to odd m <= N (the odd q-zeta value).
Rat qzeta_odd_trunc(unsigned k, const Rat& q, unsigned N);

/// Throws std::domain_error unless 0 < q < 1.
void require_unit_interval(const Rat& q);

}  // namespace qvol
