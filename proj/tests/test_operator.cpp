#include <doctest.h>

#include <random>

#include "rpq/errors.hpp"
#include "rpq/graded_operator.hpp"

using namespace rpq;

namespace {
constexpr long kLo = -10, kHi = 10;

std::vector<GradedOperator> random_ops(unsigned long long seed, int n, long band = 2) {
  std::mt19937_64 rng(seed);
  std::vector<GradedOperator> out;
  for (int i = 0; i < n; ++i) out.push_back(random_banded(rng, kLo, kHi, band));
  return out;
}
} // namespace

TEST_CASE("laurent ring basics") {
  auto x2 = lp_monomial(12, 2, Rat(3));
  auto xm1 = lp_monomial(12, -1, Rat(1, 2));
  auto prod = lp_mul(x2, xm1);
  CHECK(prod.coef.at(1) == Rat(3, 2));
  CHECK(lp_equal(lp_add(x2, xm1), lp_add(xm1, x2)));
  CHECK(lp_equal(lp_sub(x2, x2), lp_zero(12)));
  auto scaled = lp_scale_arg(x2, Rat(1, 2));
  CHECK(scaled.coef.at(2) == Rat(3, 4));
  CHECK_THROWS_AS(lp_mul(lp_monomial(3, 2, Rat(1)), lp_monomial(3, 2, Rat(1))), Error);
  CHECK_THROWS_AS(lp_add(lp_zero(3), lp_zero(4)), Error);
}

TEST_CASE("laurent ring random axioms") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> deg(-3, 3), num(-5, 5), den(1, 5);
  auto rnd = [&] {
    LaurentPoly f = lp_zero(12);
    for (int i = 0; i < 3; ++i)
      f = lp_add(f, lp_monomial(12, deg(rng), make_rat(num(rng), den(rng))));
    return f;
  };
  for (int i = 0; i < 200; ++i) {
    auto a = rnd(), b = rnd(), c = rnd();
    CHECK(lp_equal(lp_mul(a, b), lp_mul(b, a)));
    CHECK(lp_equal(lp_mul(a, lp_add(b, c)), lp_add(lp_mul(a, b), lp_mul(a, c))));
    CHECK(lp_equal(lp_mul(lp_mul(a, b), c), lp_mul(a, lp_mul(b, c))));
  }
}

TEST_CASE("composition window and application") {
  // shift +2 then -1: valid window shrinks by the shifts
  GradedOperator up = op_zero(kLo, kHi), down = op_zero(kLo, kHi);
  for (long n = kLo; n <= kHi; ++n) {
    up.act[n][n + 2] = Rat(1);
    down.act[n][n - 1] = Rat(n);
  }
  op_finalize(up);
  op_finalize(down);
  auto c = op_compose(down, up); // down after up
  CHECK(c.lo == kLo);
  CHECK(c.hi == kHi - 2);
  CHECK(c.act.at(0).at(1) == Rat(2));
  auto f = lp_monomial(12, 3, Rat(1));
  auto g = op_apply(c, f);
  CHECK(g.coef.at(4) == Rat(5));
  CHECK_THROWS_AS(op_compose(op_zero(5, 8), op_zero(-3, -1)), Error);
}

TEST_CASE("composition associativity on random operators") {
  auto ops = random_ops(21, 30 * 3);
  for (int i = 0; i < 30; ++i) {
    const auto &a = ops[3 * i], &b = ops[3 * i + 1], &c = ops[3 * i + 2];
    auto lhs = op_compose(op_compose(a, b), c);
    auto rhs = op_compose(a, op_compose(b, c));
    CHECK(!op_diff_witness(lhs, rhs, kLo, kHi).has_value());
  }
}

TEST_CASE("bracket antisymmetry and repeated arguments") {
  for (int arity = 2; arity <= 5; ++arity) {
    auto ops = random_ops(100 + arity, arity);
    auto b1 = n_bracket(ops);
    std::swap(ops[0], ops[arity - 1]);
    auto b2 = n_bracket(ops);
    auto sum = op_add(b1, b2); // transposition negates
    CHECK(op_is_zero(sum));
  }
  auto ops = random_ops(7, 3);
  ops[2] = ops[0];
  CHECK(op_is_zero(n_bracket(ops)));
}

TEST_CASE("pair bracket equals commutator") {
  auto ops = random_ops(31, 2);
  auto b = n_bracket({ops[0], ops[1]});
  auto c = op_commutator(ops[0], ops[1]);
  CHECK(!op_diff_witness(b, c, kLo, kHi).has_value());
}

TEST_CASE("generalized Jacobi: even arity forced, odd arity not") {
  // arity 2 (classical Jacobi) on random triples
  for (int rep = 0; rep < 10; ++rep) {
    auto ops = random_ops(500 + rep, 3);
    CHECK(op_is_zero(gji_residual(ops, 2)));
  }
  // arity 4 on a random 7-tuple (narrow band keeps composites inside)
  {
    auto ops = random_ops(900, 7, 1);
    CHECK(op_is_zero(gji_residual(ops, 4)));
  }
  // arity 3: some 5-tuple must leave a nonzero residual
  bool found = false;
  for (int rep = 0; rep < 5 && !found; ++rep) {
    auto ops = random_ops(700 + rep, 5, 1);
    found = !op_is_zero(gji_residual(ops, 3));
  }
  CHECK(found);
}

TEST_CASE("diff witness ordering") {
  GradedOperator a = op_zero(-5, 5), b = op_zero(-5, 5);
  a.act[-4][-4] = Rat(1);
  a.act[3][3] = Rat(2);
  b.act[3][3] = Rat(5);
  op_finalize(a);
  op_finalize(b);
  auto w = op_diff_witness(a, b, -5, 5);
  REQUIRE(w.has_value());
  CHECK(w->mode == 3); // |3| < |-4|
  CHECK(w->lhs == Rat(2));
  CHECK(w->rhs == Rat(5));
  CHECK_THROWS_AS(op_diff_witness(a, b, 7, 9), Error);
}
