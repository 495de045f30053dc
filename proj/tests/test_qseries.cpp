#include "helpers.hpp"

#include "qvol/qseries.hpp"

#include <doctest.h>

using namespace qvol;
using namespace qvol::test;

TEST_CASE("psi partial sums") {
  CHECK(psi_trunc(R(1, 2), 4) == R(105, 64));
  CHECK(psi_trunc(R(1, 3), 1) == 1);
  CHECK(psi_trunc(R(1, 2), 5) - psi_trunc(R(1, 2), 4) == R(1, 1024));
}

TEST_CASE("psi^2 converges geometrically") {
  // ratio of consecutive differences is q^{N+1} (2 psi_{N+1} + ...)/(2 psi_N + ...); at q = 4/5
  // the first step is ~0.94 > q, so near 1 the check starts one step later
  for (const Rat& q : {R(1, 4), R(1, 2), R(4, 5)}) {
    const unsigned first = q < R(3, 4) ? 2 : 3;
    Rat prev_diff = 0;
    for (unsigned N = 1; N <= 12; ++N) {
      const Rat a = psi_trunc(q, N), b = psi_trunc(q, N + 1);
      const Rat diff = b * b - a * a;
      if (N >= first) CHECK(diff <= q * prev_diff);
      prev_diff = diff;
    }
  }
}

TEST_CASE("identity examples") {
  const IdentityReport k0 = verify_qident(0, {R(1, 4), 24});
  CHECK(k0.rhs == 1);
  CHECK(k0.pass);
  const IdentityReport km1 = verify_qident(-1, {R(1, 4), 40});
  CHECK(km1.rhs == 0);
  CHECK(km1.discrepancy <= km1.budget);
  const IdentityReport k1 = verify_qident(1, {R(1, 4), 40});
  CHECK(k1.rhs == qzeta_trunc(1, R(1, 4), 40));
  CHECK(k1.pass);
  CHECK(verify_qident_odd(0, {R(1, 4), 40}).pass);
  CHECK(verify_qident_odd(-1, {R(1, 4), 40}).rhs == 0);
  CHECK(verify_qident_odd(-1, {R(1, 4), 40}).pass);
  CHECK(verify_qident_odd(2, {R(1, 2), 80}).pass);
  CHECK_THROWS_AS(verify_qident(-4, {R(1, 4), 2}), std::invalid_argument);
  CHECK_THROWS_AS(verify_qident(1, {R(1), 20}), std::domain_error);
}

TEST_CASE("budgets shrink toward the target") {
  const IdentityReport rep = verify_qident_to(3, R(1, 2), parse_rat("1e-30"), false);
  CHECK(rep.pass);
  CHECK(rep.budget <= parse_rat("1e-30"));
  // an unreachable target reports failure rather than pretending
  const IdentityReport tight = verify_qident_to(3, R(1, 2), parse_rat("1e-300"), false, 64);
  CHECK_FALSE(tight.pass);
}

TEST_CASE("tail bounds are sound under doubling N") {
  for (const Rat& q : {R(1, 4), R(1, 2)}) {
    for (unsigned N : {8u, 16u, 32u}) {
      CHECK(psi_trunc(q, 2 * N) - psi_trunc(q, N) <= psi_tail(q, N));
      for (unsigned j = 1; j <= 4; ++j) {
        CHECK(qzeta_trunc(j, q, 2 * N) - qzeta_trunc(j, q, N) <= qzeta_tail(j, q, N));
        CHECK(qzeta_odd_trunc(j, q, 2 * N) - qzeta_odd_trunc(j, q, N) <= qzeta_odd_tail(j, q, N));
      }
      for (int k = -4; k <= 6; ++k) {
        if (N < min_truncation(k, false)) continue;
        CHECK(abs(Rat(qident_lhs(k, q, 2 * N) - qident_lhs(k, q, N))) <= qident_lhs_tail(k, q, N));
      }
      for (int k = -3; k <= 5; ++k) {
        if (N < min_truncation(k, true)) continue;
        CHECK(abs(Rat(qident_odd_lhs(k, q, 2 * N) - qident_odd_lhs(k, q, N))) <= qident_odd_lhs_tail(k, q, N));
      }
    }
  }
}

TEST_CASE("F oracle against the symbolic polynomial") {
  // F_1 at y = 0 is 4 zeta_q(2)
  const OracleReport c0 = compare_f_oracle(Flavor::QClassical, 0, 0, R(1, 2), 64);
  CHECK(c0.pass);
  CHECK(abs(Rat(c0.oracle - 4 * qzeta_trunc(1, R(1, 4), 64))) <= c0.budget);
  for (const Rat& y : {R(0), R(1), R(5, 2)}) {
    const OracleReport s0 = compare_f_oracle(Flavor::QSuper, 0, y, R(1, 2), 64);
    CHECK(s0.symbolic == y);
    CHECK(s0.pass);
  }
  for (unsigned k = 0; k <= 3; ++k)
    CHECK(f_oracle(Flavor::QClassical, k, R(3, 2), R(1, 2), 30) ==
          f_oracle(Flavor::QClassical, k, R(-3, 2), R(1, 2), 30));
  const OracleReport sup = compare_f_oracle_to(Flavor::QSuper, 1, 2, R(1, 2), parse_rat("1e-25"));
  CHECK(sup.pass);
  CHECK_THROWS_AS(f_oracle(Flavor::WpClassical, 0, 0, R(1, 2), 8), std::invalid_argument);
}

TEST_CASE("limit kernels in closed form") {
  // H(0, y) = 1 identically
  for (const Rat& y : {R(0), R(3), R(-7, 2)}) {
    const std::string v = limit_kernel_value(0, y, 40, false);
    CHECK(v.rfind("1.000000000000000000000000000000000000", 0) == 0);
  }
  // Hhat(x, x) = (1 - 1/cosh(x/2)) / (4 pi); at x = 2: (1 - sech 1)/(4 pi) = 0.0280069...
  const std::string s = limit_kernel_value(2, 2, 30, true);
  CHECK(s.rfind("2.80069", 0) == 0);
}

TEST_CASE("kernel limit trend") {
  const std::vector<Rat> rs{R(9, 10), R(19, 20), R(99, 100)};
  const TrendReport t = kernel_limit_trend(1, 0, rs, 60);
  CHECK(t.strictly_decreasing);
  CHECK(t.discrepancy.size() == 3);
  CHECK(t.discrepancy[0].rfind("3.9", 0) == 0);
  const TrendReport sup = kernel_limit_trend(1, 1, rs, 60, true);
  CHECK(sup.strictly_decreasing);
  CHECK_THROWS_AS(kernel_limit_trend(1, 2, rs, 60), std::invalid_argument);
  CHECK_THROWS_AS(kernel_limit_trend(1, 0, {R(1)}, 60), std::domain_error);
}
