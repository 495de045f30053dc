#pragma once

// Exact rationals. GMP keeps every mpq_class in lowest terms with a positive
// denominator as long as values are built through the helpers below.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qvol {

using Rat = mpq_class;
using BigInt = mpz_class;

/// Raised on malformed user input (bad flags, unparsable numbers, unstable (g,n)).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal consistency check fails (inexact division by L1,
/// recursion cycle). Never expected on valid input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Rat make_rat(const BigInt& num, const BigInt& den);
Rat make_rat(std::int64_t num, std::int64_t den = 1);

/// Canonical "p/q" (or "p" when q = 1).
std::string to_string(const Rat& r);

/// Accepts "p/q", "p", "-3/4", decimals "0.95" and scientific "1e-30".
Rat parse_rat(std::string_view s);

/// r^e for any integer e (r != 0 when e < 0).
Rat pow(const Rat& r, long e);

Rat abs(const Rat& r);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// Decimal rendering with `digits` significant digits, for human-facing reports.
std::string to_decimal(const Rat& r, int digits = 20);

}  // namespace qvol
