#pragma once

#include <gmpxx.h>

#include <string>

namespace rpq {

// Exact scalar type. All engine arithmetic is over Q; nothing is floated.
using Rat = mpq_class;

// b^e for any integer e; e < 0 inverts (DivisionByZeroMode if b == 0).
Rat pow_rat(const Rat& b, long e);

// mpq_class(n, d) keeps the raw pair; gmp arithmetic needs canonical form.
inline Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "num/den" or "num" with optional sign; canonicalizes.
// Throws ConfigInvalid on malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

// Canonical "num/den", or "num" when the denominator is 1.
std::string rat_to_string(const Rat& r);

// Classical (undeformed) integer factorial and binomial as exact rationals.
Rat factorial_int(long n);      // NegativeArgument if n < 0
Rat binom_int(long n, long k);  // 0 outside 0 <= k <= n

} // namespace rpq
