#include "qvol/rat.hpp"

#include <mpfr.h>

#include <cctype>
#include <vector>

namespace qvol {

Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(std::int64_t num, std::int64_t den) {
  return make_rat(BigInt(std::to_string(num)), BigInt(std::to_string(den)));
}

std::string to_string(const Rat& r) { return r.get_str(10); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_int(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw UsageError("not an integer: '" + std::string(s) + "'");
  BigInt v(std::string(s), 10);
  return neg ? BigInt(-v) : v;
}

}  // namespace

Rat parse_rat(std::string_view s) {
  if (s.empty()) throw UsageError("empty rational");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt den = parse_int(s.substr(slash + 1));
    if (den <= 0) throw UsageError("denominator must be positive: '" + std::string(s) + "'");
    return make_rat(parse_int(s.substr(0, slash)), den);
  }
  // decimal / scientific
  std::string_view mant = s;
  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mant = s.substr(0, e);
    BigInt ex = parse_int(s.substr(e + 1));
    if (!ex.fits_slong_p() || abs(ex) > 100000) throw UsageError("exponent out of range");
    exp10 = ex.get_si();
  }
  bool neg = false;
  if (!mant.empty() && (mant.front() == '-' || mant.front() == '+')) {
    neg = mant.front() == '-';
    mant.remove_prefix(1);
  }
  std::string digits;
  if (auto dot = mant.find('.'); dot != std::string_view::npos) {
    std::string_view ip = mant.substr(0, dot), fp = mant.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp)))
      throw UsageError("not a number: '" + std::string(s) + "'");
    digits = std::string(ip) + std::string(fp);
    exp10 -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(mant)) throw UsageError("not a number: '" + std::string(s) + "'");
    digits = std::string(mant);
  }
  Rat v(BigInt(digits, 10));
  v *= pow(Rat(10), exp10);
  return neg ? Rat(-v) : v;
}

Rat pow(const Rat& r, long e) {
  if (e < 0) {
    if (r == 0) throw std::domain_error("zero to a negative power");
    Rat inv = 1 / r;
    return pow(inv, -e);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rat out;
  mpq_set_num(out.get_mpq_t(), num.get_mpz_t());
  mpq_set_den(out.get_mpq_t(), den.get_mpz_t());
  return out;  // coprime powers stay coprime
}

Rat abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

BigInt factorial(unsigned n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

std::string to_decimal(const Rat& r, int digits) {
  mpfr_t x;
  mpfr_init2(x, static_cast<mpfr_prec_t>(digits * 3.33 + 16));
  mpfr_set_q(x, r.get_mpq_t(), MPFR_RNDN);
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, x);
  mpfr_clear(x);
  return std::string(buf.data());
}

}  // namespace qvol
