#include <doctest.h>

#include "rpq/deformation.hpp"
#include "rpq/errors.hpp"

using namespace rpq;

namespace {
Deformation pq_ref() { return Deformation::two_param(Rat(1, 2), Rat(1, 3)); }
Deformation q_ref() { return Deformation::one_param(Rat(1, 3)); }

// Kernel (u - v)u: vanishes at (1,1), eigenvalue k(n) = (p - q) p^n.
CustomTable twisted_table() {
  CustomTable t;
  t.bound = 2;
  t.terms[{2, 0}] = Rat(1);
  t.terms[{1, 1}] = Rat(-1);
  return t;
}
} // namespace

TEST_CASE("frozen deformed numbers") {
  auto d = pq_ref();
  CHECK(d.number(1) == Rat(1));
  CHECK(d.number(2) == Rat(5, 6));
  CHECK(d.number(3) == Rat(19, 36));
  CHECK(d.number(0) == Rat(0));
  CHECK(q_ref().number(3) == Rat(13, 9));
}

TEST_CASE("numbers agree with kernel evaluation and closed forms") {
  auto dpq = pq_ref();
  auto dq = q_ref();
  for (long n = -12; n <= 12; ++n) {
    CHECK(dpq.number(n) == dpq.R_at(pow_rat(dpq.p(), n), pow_rat(dpq.q(), n)));
    CHECK(dpq.number(n) == dpq.number_core(n));
    CHECK(dq.number(n) == (Rat(1) - pow_rat(dq.q(), n)) / (Rat(1) - dq.q()));
    // reflection: [-n] = -[n]/(pq)^n on the two-parameter family
    CHECK(dpq.number(-n) == -dpq.number(n) / pow_rat(dpq.p() * dpq.q(), n));
    CHECK(dpq.k_eigenvalue(n) == Rat(1));
    CHECK(dq.k_eigenvalue(n) == Rat(1));
  }
}

TEST_CASE("factorial, binomial, falling") {
  auto d = pq_ref();
  CHECK(d.factorial(0) == Rat(1));
  CHECK(d.factorial(3) == d.number(1) * d.number(2) * d.number(3));
  for (long n = 0; n <= 8; ++n)
    for (long k = 0; k <= n; ++k) {
      CHECK(d.binomial(n, k) == d.binomial(n, n - k));
      CHECK(d.binomial(n, k) == d.factorial(n) / (d.factorial(k) * d.factorial(n - k)));
    }
  CHECK_THROWS_AS(d.binomial(3, 5), Error);
  CHECK(d.binomial_or_zero(3, 5) == Rat(0));
  CHECK(d.binomial_or_zero(-1, 0) == Rat(0));

  CHECK(d.falling(5, 0) == Rat(1));
  // falling vanishes exactly when k > n >= 0
  CHECK(d.falling(3, 4) == Rat(0));
  CHECK(d.falling(0, 1) == Rat(0));
  CHECK(d.falling(-2, 3) != Rat(0));
  CHECK(d.falling(4, 2) == d.number(4) * d.number(3));
  CHECK_THROWS_AS(d.falling(4, -1), Error);
}

TEST_CASE("bracket prefactor") {
  auto d = pq_ref();
  CHECK(d.bracket_prefactor(1, 2) == Rat(5, 2));
  CHECK(d.bracket_prefactor(0, 2) == Rat(1));
  CHECK(d.bracket_prefactor(7, 3) == Rat(1));
  // closed form (p^{-M} + q^{-M})/2 on the two-parameter family
  for (long m = -4; m <= 4; ++m) {
    if (m == 0) continue;
    CHECK(d.bracket_prefactor(m, 4) ==
          (pow_rat(d.p(), -m) + pow_rat(d.q(), -m)) / 2);
  }
}

TEST_CASE("scaled numbers") {
  auto dpq = pq_ref();
  auto dq = q_ref();
  CHECK(dpq.number_scaled(2, 2) == Rat(13, 36));
  CHECK(dq.number_scaled(2, 2) == Rat(10, 9));
  CHECK(dpq.number_scaled(3, 0) == Rat(0));
  // equals the closed form at (p^a, q^a) on built-ins
  for (long a = 1; a <= 3; ++a)
    for (long n = -6; n <= 6; ++n) {
      auto da = Deformation::two_param(pow_rat(dpq.p(), a), pow_rat(dpq.q(), a));
      CHECK(dpq.number_scaled(a, n) == da.number(n));
    }
  for (long n = -6; n <= 6; ++n)
    CHECK(dpq.number_scaled(1, n) == dpq.number(n));
}

TEST_CASE("vandermonde factors") {
  auto d = pq_ref();
  CHECK(d.vandermonde({0, 1, 2}, 0) == Rat(-5, 36));
  CHECK(d.vandermonde({3}, 1) == Rat(1));
  CHECK(d.vandermonde({2, 2, 5}, 1) == Rat(0));
}

TEST_CASE("custom kernel tables") {
  auto d = Deformation::custom(Rat(1, 2), Rat(1, 3), twisted_table());
  // [n] = p^n (p^n - q^n), so k(n) = (p - q) p^n
  for (long n = -5; n <= 5; ++n) {
    CHECK(d.number(n) == pow_rat(d.p(), n) * (pow_rat(d.p(), n) - pow_rat(d.q(), n)));
    if (n != 0)
      CHECK(d.k_eigenvalue(n) == (d.p() - d.q()) * pow_rat(d.p(), n));
  }
  CHECK(d.number(0) == Rat(0));
  CHECK_THROWS_AS(d.k_eigenvalue(0), Error);
  CHECK_THROWS_AS(d.bracket_prefactor(0, 2), Error);

  CustomTable bad;
  bad.bound = 1;
  bad.terms[{0, 0}] = Rat(1);
  CHECK_THROWS_AS(Deformation::custom(Rat(1, 2), Rat(1, 3), bad), Error);
}

TEST_CASE("parameter ordering enforced") {
  CHECK_THROWS_AS(Deformation::two_param(Rat(1, 3), Rat(1, 2)), Error);
  CHECK_THROWS_AS(Deformation::two_param(Rat(3, 2), Rat(1, 3)), Error);
  CHECK_THROWS_AS(Deformation::two_param(Rat(1, 2), Rat(1, 2)), Error);
  CHECK_THROWS_AS(Deformation::one_param(Rat(2)), Error);
  CHECK_NOTHROW(Deformation::two_param(Rat(1), Rat(1, 5)));
}

TEST_CASE("rational helpers") {
  CHECK(pow_rat(Rat(2, 3), -2) == Rat(9, 4));
  CHECK(pow_rat(Rat(5), 0) == Rat(1));
  CHECK(rat_from_string("-7/2") == Rat(-7, 2));
  CHECK(rat_to_string(Rat(-7, 2)) == "-7/2");
  CHECK(rat_to_string(Rat(4, 2)) == "2");
  CHECK(factorial_int(5) == Rat(120));
  CHECK(binom_int(7, 3) == Rat(35));
  CHECK(binom_int(3, 5) == Rat(0));
  CHECK_THROWS_AS(rat_from_string("x"), Error);
}
