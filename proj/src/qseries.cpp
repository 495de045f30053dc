#include "qvol/qseries.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <stdexcept>

namespace qvol {

namespace {

long as_long(unsigned v) { return static_cast<long>(v); }

// Geometric-series factor 1/(1 - q^step) for step >= 1.
Rat geometric(const Rat& q, long step) {
  if (step < 1) throw std::logic_error("tail bound used below its validity range");
  return 1 / Rat(1 - pow(q, step));
}

std::vector<Rat> zeta_values(unsigned count, const Rat& q, unsigned N, bool odd) {
  std::vector<Rat> z;
  for (unsigned j = 1; j <= count; ++j) z.push_back(odd ? qzeta_odd_trunc(j, q, N) : qzeta_trunc(j, q, N));
  return z;
}

std::vector<Rat> zeta_tails(unsigned count, const Rat& q, unsigned N, bool odd) {
  std::vector<Rat> t;
  for (unsigned j = 1; j <= count; ++j) t.push_back(odd ? qzeta_odd_tail(j, q, N) : qzeta_tail(j, q, N));
  return t;
}

// s_0..s_k at the truncated values, and the bound s_n(z + eps) - s_n(z) on the
// truncation error; valid because every s_n has nonnegative coefficients.
struct SchurBounds {
  std::vector<Rat> value;
  std::vector<Rat> error;
};

SchurBounds schur_with_error(unsigned k, const Rat& q, unsigned N, bool odd) {
  const auto z = zeta_values(k, q, N, odd);
  const auto t = zeta_tails(k, q, N, odd);
  std::vector<Rat> upper;
  for (unsigned j = 0; j < k; ++j) upper.push_back(z[j] + t[j]);
  SchurBounds out;
  out.value = schur_s_upto<Rat>(k, z, Rat(1));
  const auto hi = schur_s_upto<Rat>(k, upper, Rat(1));
  for (unsigned n = 0; n <= k; ++n) out.error.push_back(hi[n] - out.value[n]);
  return out;
}

unsigned first_odd_above(unsigned N) { return N % 2 == 0 ? N + 1 : N + 2; }

}  // namespace

Rat psi_trunc(const Rat& q, unsigned N) {
  require_unit_interval(q);
  Rat sum = 0;
  for (unsigned j = 0; j < N; ++j) sum += pow(q, as_long(j * (j + 1) / 2));
  return sum;
}

Rat psi_tail(const Rat& q, unsigned N) {
  require_unit_interval(q);
  // terms j >= N; consecutive ratio q^{j+1} <= ... <= q^{N+1}
  return pow(q, as_long(N * (N + 1) / 2)) * geometric(q, as_long(N) + 1);
}

Rat qzeta_tail(unsigned j, const Rat& q, unsigned N) {
  require_unit_interval(q);
  // q^{mj}/(1-q^m)^{2j} <= q^{mj}/(1-q)^{2j}, geometric in m with ratio q^j
  return pow(q, as_long((N + 1) * j)) / pow(Rat(1 - q), 2 * as_long(j)) * geometric(q, j);
}

Rat qzeta_odd_tail(unsigned j, const Rat& q, unsigned N) {
  require_unit_interval(q);
  const unsigned M = first_odd_above(N);
  return pow(q, as_long(M * j)) / pow(Rat(1 - q), 2 * as_long(j)) * geometric(q, 2 * as_long(j));
}

Rat qident_lhs(int k, const Rat& q, unsigned N) {
  require_unit_interval(q);
  Rat sum = 0;
  Rat tri = 1;  // q^{m(m-1)/2}
  Rat qm = 1;
  for (unsigned m = 1; m <= N; ++m) {
    tri *= qm;  // multiplies by q^{m-1}
    qm *= q;
    const Rat one_minus = 1 - qm;
    Rat term = tri * (1 + qm);
    if (k >= 0) {
      term *= pow(qm, k) / pow(one_minus, 2L * k);
    } else {
      term *= pow(one_minus, -2L * k) / pow(qm, -k);
    }
    if (m % 2 == 1) sum += term; else sum -= term;
  }
  return sum;
}

Rat qident_lhs_tail(int k, const Rat& q, unsigned N) {
  require_unit_interval(q);
  const long m = as_long(N) + 1;
  if (k >= 0) {
    // |T_m| <= 2 q^{m(m-1)/2 + mk} / (1-q)^{2k}; exponent step m + k >= N + 1
    return 2 * pow(q, m * (m - 1) / 2 + m * k) / pow(Rat(1 - q), 2L * k) * geometric(q, m);
  }
  const long h = -k;
  // |T_m| <= 2 q^{m(m-1)/2 - mh}; exponent step m - h >= N + 1 - h
  return 2 * pow(q, m * (m - 1) / 2 - m * h) * geometric(q, m - h);
}

Rat qident_odd_lhs(int k, const Rat& q, unsigned N) {
  require_unit_interval(q);
  Rat sum = 0;
  for (unsigned m = 1; m <= N; m += 2) {
    const Rat qm = pow(q, as_long(m));
    const Rat one_minus = 1 - qm;
    Rat term = pow(q, as_long((m * m - 1) / 4)) * (1 + qm);
    if (k >= 0) {
      term *= pow(qm, k) / pow(one_minus, 2L * k + 1);
    } else {
      term *= pow(one_minus, -2L * k - 1) / pow(qm, -k);
    }
    if ((m - 1) / 2 % 2 == 0) sum += term; else sum -= term;
  }
  return sum;
}

Rat qident_odd_lhs_tail(int k, const Rat& q, unsigned N) {
  require_unit_interval(q);
  const long M = first_odd_above(N);
  const long e = (M * M - 1) / 4;
  if (k >= 0) {
    // step e(m+2) - e(m) = m + 1 + 2k >= M + 1
    return 2 * pow(q, e + M * k) / pow(Rat(1 - q), 2L * k + 1) * geometric(q, M + 1);
  }
  const long h = -k;
  return 2 * pow(q, e - M * h) * geometric(q, M + 1 - 2 * h);
}

unsigned min_truncation(int k, bool odd) {
  const unsigned h = k < 0 ? static_cast<unsigned>(-k) : 0;
  return odd ? 2 * h + 1 : h + 1;
}

namespace {

IdentityReport finish(int k, const Truncation& trunc, Rat lhs, Rat rhs, Rat budget) {
  IdentityReport rep;
  rep.k = k;
  rep.q = trunc.q;
  rep.N = trunc.N;
  rep.discrepancy = abs(Rat(lhs - rhs));
  rep.lhs = std::move(lhs);
  rep.rhs = std::move(rhs);
  rep.budget = std::move(budget);
  rep.pass = rep.discrepancy <= rep.budget;
  return rep;
}

void check_truncation(int k, const Truncation& trunc, bool odd) {
  require_unit_interval(trunc.q);
  if (trunc.N < min_truncation(k, odd))
    throw std::invalid_argument("truncation N=" + std::to_string(trunc.N) + " too small for k=" +
                                std::to_string(k));
}

}  // namespace

IdentityReport verify_qident(int k, const Truncation& trunc) {
  check_truncation(k, trunc, false);
  Rat lhs = qident_lhs(k, trunc.q, trunc.N);
  Rat budget = qident_lhs_tail(k, trunc.q, trunc.N);
  Rat rhs = 0;
  if (k >= 0) {
    const auto s = schur_with_error(static_cast<unsigned>(k), trunc.q, trunc.N, false);
    rhs = s.value.back();
    budget += s.error.back();
  }
  return finish(k, trunc, std::move(lhs), std::move(rhs), std::move(budget));
}

IdentityReport verify_qident_odd(int k, const Truncation& trunc) {
  check_truncation(k, trunc, true);
  Rat lhs = qident_odd_lhs(k, trunc.q, trunc.N);
  Rat budget = qident_odd_lhs_tail(k, trunc.q, trunc.N);
  Rat rhs = 0;
  if (k >= 0) {
    const auto s = schur_with_error(static_cast<unsigned>(k), trunc.q, trunc.N, true);
    const Rat psi = psi_trunc(trunc.q, trunc.N);
    const Rat t = psi_tail(trunc.q, trunc.N);
    const Rat psi2 = psi * psi;
    rhs = psi2 * s.value.back();
    // |psi^2 S - psi_N^2 S_N| <= (2 psi_N t + t^2)(S_N + dS) + psi_N^2 dS
    budget += (2 * psi * t + t * t) * (s.value.back() + s.error.back()) + psi2 * s.error.back();
  }
  return finish(k, trunc, std::move(lhs), std::move(rhs), std::move(budget));
}

IdentityReport verify_qident_to(int k, const Rat& q, const Rat& target, bool odd, unsigned max_N) {
  unsigned N = std::max(8u, 2 * min_truncation(k, odd));
  IdentityReport rep;
  while (true) {
    rep = odd ? verify_qident_odd(k, {q, N}) : verify_qident(k, {q, N});
    if (rep.budget <= target) return rep;
    if (2 * N > max_N) {
      rep.pass = false;
      return rep;
    }
    N *= 2;
  }
}

Rat eval_numeric(const UniPoly& p, const Rat& y, const Rat& q, unsigned N) {
  Rat sum = 0;
  for (const auto& [e, c] : p.terms()) sum += ring_eval_numeric(c, q, N) * pow(y, as_long(e));
  return sum;
}

Rat f_oracle(Flavor flavor, unsigned k, const Rat& y, const Rat& r, unsigned N) {
  if (r <= 0 || r >= 1) throw std::domain_error("f_oracle needs 0 < r < 1");
  if (flavor == Flavor::QClassical) {
    // x^{2k+1} H_q(x,y) = sum_m f_m (r^m + r^-m) x^{2k+1} e^{-x d_m/2} cosh(y d_m/2),
    // d_m = r^-m - r^m; integrate each y^{2j} coefficient in x.
    std::vector<Rat> coeff(k + 2, Rat(0));
    for (unsigned m = 1; m <= N; ++m) {
      const Rat rm = pow(r, as_long(m));
      const Rat d = 1 / rm - rm;
      Rat base = pow(r, as_long(m * m)) * (rm + 1 / rm);
      if (m % 2 == 0) base = -base;
      // (d/2)^{2j}/(2j)! from cosh, (2k+1)! (2/d)^{2k+2} from the x-integral
      const Rat inv_sq = pow(Rat(2 / d), 2);
      Rat w = base;
      for (unsigned j = k + 2; j-- > 0;) {
        coeff[j] += w;  // base (2/d)^{2(k+1-j)}
        w *= inv_sq;
      }
    }
    Rat sum = 0;
    for (unsigned j = 0; j <= k + 1; ++j)
      sum += coeff[j] * pow(y, 2 * as_long(j)) / Rat(factorial(2 * j));
    return sum * Rat(factorial(2 * k + 1));
  }
  if (flavor == Flavor::QSuper) {
    // x^{2k+1} Hhat_q(x,y) = (1/(8 psi^2)) sum_m f_m (r^m + r^-m) x^{2k+1} e^{-x d_m/4} 2 sinh(y d_m/4)
    const Rat q = r * r;
    std::vector<Rat> coeff(k + 1, Rat(0));
    for (unsigned m = 1; m <= N; m += 2) {
      const Rat rm = pow(r, as_long(m));
      const Rat d = 1 / rm - rm;
      Rat base = pow(r, as_long((m * m - 1) / 2)) * (rm + 1 / rm);
      if ((m - 1) / 2 % 2 == 1) base = -base;
      // 2 (d/4)^{2j+1} / (d/4)^{2k+2} = 2 (4/d)^{2(k-j)+1}
      const Rat inv = 4 / d;
      const Rat inv_sq = inv * inv;
      Rat w = 2 * base * inv;
      for (unsigned j = k + 1; j-- > 0;) {
        coeff[j] += w;
        w *= inv_sq;
      }
    }
    const Rat psi = psi_trunc(q, N);
    Rat sum = 0;
    for (unsigned j = 0; j <= k; ++j)
      sum += coeff[j] * pow(y, 2 * as_long(j) + 1) / Rat(factorial(2 * j + 1));
    return sum * Rat(factorial(2 * k + 1)) / (8 * psi * psi);
  }
  throw std::invalid_argument("f_oracle supports the q flavors only");
}

OracleReport compare_f_oracle(Flavor flavor, unsigned k, const Rat& y, const Rat& r, unsigned N) {
  OracleReport rep;
  rep.flavor = flavor;
  rep.k = k;
  rep.y = y;
  rep.r = r;
  rep.N = N;
  const Rat q = r * r;
  const bool odd = flavor == Flavor::QSuper;
  rep.oracle = f_oracle(flavor, k, y, r, N);
  rep.symbolic = eval_numeric(f_poly(flavor, k), y, q, N);
  rep.discrepancy = abs(Rat(rep.oracle - rep.symbolic));

  const Rat ay = abs(y);
  const Rat lead(factorial(2 * k + 1));
  const unsigned top = odd ? k : k + 1;  // highest b-index in F
  const auto s = schur_with_error(top, q, N, odd);
  Rat budget = 0;
  if (!odd) {
    for (unsigned n = 0; n <= top; ++n) {
      const unsigned e = 2 * k + 2 - 2 * n;
      const Rat w = lead * pow(ay, as_long(e)) / Rat(factorial(e)) * pow(Rat(4), as_long(n));
      budget += w * (qident_lhs_tail(static_cast<int>(n), q, N) + s.error[n]);
    }
  } else {
    const Rat psi = psi_trunc(q, N);
    const Rat t = psi_tail(q, N);
    const Rat psi2 = psi * psi;
    const Rat inv_gap = (2 * psi * t + t * t) / (psi2 * psi2);  // >= 1/psi_N^2 - 1/psi^2
    for (unsigned n = 0; n <= top; ++n) {
      const unsigned e = 2 * k + 1 - 2 * n;
      const Rat w = lead * pow(ay, as_long(e)) / Rat(factorial(e)) * pow(Rat(16), as_long(n));
      const Rat tail = qident_odd_lhs_tail(static_cast<int>(n), q, N);
      const Rat S = abs(qident_odd_lhs(static_cast<int>(n), q, N));
      const Rat oracle_err = tail / psi2 + (S + tail) * inv_gap;
      budget += w * (oracle_err + s.error[n]);
    }
  }
  rep.budget = budget;
  rep.pass = rep.discrepancy <= rep.budget;
  return rep;
}

OracleReport compare_f_oracle_to(Flavor flavor, unsigned k, const Rat& y, const Rat& r,
                                 const Rat& target, unsigned max_N) {
  unsigned N = 16;
  while (true) {
    OracleReport rep = compare_f_oracle(flavor, k, y, r, N);
    if (rep.budget <= target) return rep;
    if (2 * N > max_N) {
      rep.pass = false;
      return rep;
    }
    N *= 2;
  }
}

namespace {

using Real = boost::multiprecision::mpfr_float;

Real to_real(const Rat& v) {
  Real out;
  mpfr_set_q(out.backend().data(), v.get_mpq_t(), MPFR_RNDN);
  return out;
}

// The installed boost only has a process-wide default precision, so real
// evaluations are serialized and the previous precision restored on exit.
std::mutex precision_mutex;

class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits) : lock_(precision_mutex), saved_(Real::default_precision()) {
    Real::default_precision(digits);
  }
  ~PrecisionScope() { Real::default_precision(saved_); }

 private:
  std::lock_guard<std::mutex> lock_;
  unsigned saved_;
};

Real limit_kernel(const Real& x, const Real& y, bool super) {
  using boost::multiprecision::cosh;
  using boost::multiprecision::exp;
  if (super) {
    Real pi_val;
    mpfr_const_pi(pi_val.backend().data(), MPFR_RNDN);
    return (1 / cosh((x - y) / 4) - 1 / cosh((x + y) / 4)) / (4 * pi_val);
  }
  return 1 / (1 + exp((x + y) / 2)) + 1 / (1 + exp((x - y) / 2));
}

// Sum until terms drop below 10^-(digits + 10); terms decay once they are small.
Real q_kernel(const Real& X, const Real& Y, const Real& q, unsigned digits, bool super) {
  using boost::multiprecision::exp;
  using boost::multiprecision::pow;
  using boost::multiprecision::sqrt;
  const Real eps = pow(Real(10), -static_cast<int>(digits) - 10);
  const Real root = sqrt(q);
  Real sum = 0;
  const unsigned step = super ? 2 : 1;
  for (unsigned m = 1;; m += step) {
    if (m > 1000000) throw std::runtime_error("kernel series did not converge");
    const Real rm = pow(root, m);
    const Real c = rm - 1 / rm;
    Real term;
    if (super) {
      term = pow(root, (m * m - 1) / 2) * (rm + 1 / rm) * (exp((X - Y) * c / 4) - exp((X + Y) * c / 4));
      if ((m - 1) / 2 % 2 == 1) term = -term;
    } else {
      term = pow(root, m * m) * (rm + 1 / rm) * (exp((X + Y) * c / 2) + exp((X - Y) * c / 2)) / 2;
      if (m % 2 == 0) term = -term;
    }
    sum += term;
    if (m > 4 && boost::multiprecision::abs(term) < eps) break;
  }
  if (super) {
    Real psi = 0;
    for (unsigned j = 0;; ++j) {
      const Real t = pow(q, j * (j + 1) / 2);
      psi += t;
      if (t < eps) break;
    }
    sum /= 8 * psi * psi;
  }
  return sum;
}

}  // namespace

std::string limit_kernel_value(const Rat& x, const Rat& y, unsigned digits, bool super) {
  PrecisionScope scope(digits + 20);
  return limit_kernel(to_real(x), to_real(y), super).str(static_cast<std::streamsize>(digits),
                                                         std::ios_base::scientific);
}

TrendReport kernel_limit_trend(const Rat& x, const Rat& y, const std::vector<Rat>& r_sequence,
                               unsigned digits, bool super) {
  if (x < abs(y)) throw std::invalid_argument("kernel series needs x >= |y|");
  PrecisionScope scope(digits + 20);
  TrendReport rep;
  rep.x = x;
  rep.y = y;
  rep.super = super;
  rep.precision = digits;
  rep.r = r_sequence;
  const Real xr = to_real(x), yr = to_real(y);
  const Real target = limit_kernel(xr, yr, super);
  const Real floor = boost::multiprecision::pow(Real(10), -static_cast<int>(digits) + 5);
  std::vector<Real> values;
  for (const Rat& r : r_sequence) {
    if (r <= 0 || r >= 1) throw std::domain_error("r must lie in (0,1)");
    const Real q = to_real(Rat(r * r));
    const Real scale = 1 - q;
    Real hq = q_kernel(xr / scale, yr / scale, q, digits, super);
    if (super) hq /= scale;
    const Real diff = boost::multiprecision::abs(hq - target);
    if (diff < floor && diff != 0)
      throw std::runtime_error("discrepancy below working precision; raise --precision");
    values.push_back(diff);
    rep.discrepancy.push_back(diff.str(static_cast<std::streamsize>(digits), std::ios_base::scientific));
  }
  rep.strictly_decreasing = !values.empty();
  for (std::size_t i = 1; i < values.size(); ++i)
    if (!(values[i] < values[i - 1])) rep.strictly_decreasing = false;
  return rep;
}

}  // namespace qvol
