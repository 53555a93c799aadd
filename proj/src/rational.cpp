#include "rpq/rational.hpp"

#include <cstdlib>

#include "rpq/errors.hpp"

namespace rpq {

Rat pow_rat(const Rat& b, long e) {
  if (e == 0) return Rat(1);
  bool invert = e < 0;
  unsigned long k = invert ? static_cast<unsigned long>(-(e + 1)) + 1UL
                           : static_cast<unsigned long>(e);
  if (invert && b == 0) fail(Err::DivisionByZeroMode, "0 to a negative power");
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), k);
  mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), k);
  out.canonicalize();
  if (invert) out = Rat(1) / out;
  return out;
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) fail(Err::ConfigInvalid, "empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0)
    fail(Err::ConfigInvalid, "bad rational literal '" + s + "'");
  if (r.get_den() == 0)
    fail(Err::ConfigInvalid, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_str();
}

Rat factorial_int(long n) {
  if (n < 0) fail(Err::NegativeArgument, "integer factorial at " + std::to_string(n));
  Rat out(1);
  for (long i = 2; i <= n; ++i) out *= i;
  return out;
}

Rat binom_int(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rat(0);
  Rat out(1);
  for (long i = 1; i <= k; ++i) out *= Rat(n - k + i) / Rat(i);
  return out;
}

} // namespace rpq
