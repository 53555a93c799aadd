#include <doctest.h>

#include "rpq/errors.hpp"
#include "rpq/toperator.hpp"
#include "rpq/xseries.hpp"

using namespace rpq;

namespace {

TSeries t(long w, long k) { return ts_time(w, k); }

} // namespace

TEST_CASE("series ring basics") {
  const long W = 6;
  TSeries a = ts_add(ts_const(W, Rat(1)), t(W, 1)); // 1 + t1
  TSeries sq = ts_mul(a, a);
  TSeries expect = ts_const(W, Rat(1));
  ts_insert(expect, TMono{{1, 1}}, Rat(2));
  ts_insert(expect, TMono{{1, 2}}, Rat(1));
  CHECK(ts_equal(sq, expect));

  // cap drops: t5 * t3 escapes weight 6
  CHECK(ts_is_zero(ts_mul(t(W, 5), t(W, 3))));

  // exp(t1) at cap 2 = 1 + t1 + t1^2/2
  TSeries e = ts_exp(ts_time(2, 1));
  CHECK(ts_coeff(e, TMono{}) == 1);
  CHECK(ts_coeff(e, TMono{{1, 1}}) == 1);
  CHECK(ts_coeff(e, TMono{{1, 2}}) == Rat(1) / 2);
  CHECK(e.c.size() == 3);

  CHECK_THROWS_AS(ts_exp(ts_const(W, Rat(1))), Error);
  CHECK_THROWS_AS(ts_add(ts_const(3, Rat(1)), ts_const(4, Rat(1))), Error);

  // rescale t_k -> k t_k on t1*t2
  TSeries m = ts_mul(t(W, 1), t(W, 2));
  TSeries r = ts_rescale(m, [](long k) { return Rat(k); });
  CHECK(ts_coeff(r, TMono{{1, 1}, {2, 1}}) == 2);

  CHECK(ts_is_zero(ts_drop_above(m, 1)));
  CHECK(!ts_is_zero(ts_drop_above(m, 2)));

  // d/dt1 of t1^2 t2 = 2 t1 t2
  TSeries g = ts_mul(m, t(W, 1));
  CHECK(ts_coeff(ts_dt(g, 1), TMono{{1, 1}, {2, 1}}) == 2);
}

TEST_CASE("bell coefficients against the recursion") {
  auto gen = bell_coefficients(8);
  auto rec = bell_recursion(8);
  REQUIRE(gen.size() == 9);
  for (size_t k = 0; k < gen.size(); ++k) CHECK(ts_equal(gen[k], rec[k]));

  // frozen: B_2 = t1^2 + t2
  CHECK(ts_coeff(gen[2], TMono{{1, 2}}) == 1);
  CHECK(ts_coeff(gen[2], TMono{{2, 1}}) == 1);
  CHECK(gen[2].c.size() == 2);

  // every monomial of B_k has weight exactly k
  for (size_t k = 0; k < gen.size(); ++k)
    for (const auto& [mono, v] : gen[k].c) CHECK(tmono_weight(mono) == static_cast<long>(k));
}

TEST_CASE("formal operator algebra") {
  const long W = 6;
  TOperator d1{W, {}};
  d1.terms[DMulti{{1, 1}}] = ts_const(W, Rat(1));
  TOperator d2{W, {}};
  d2.terms[DMulti{{2, 1}}] = ts_const(W, Rat(1));

  TOperator prod = top_mul(d1, d2);
  REQUIRE(prod.terms.size() == 1);
  CHECK(prod.terms.begin()->first == DMulti{{1, 1}, {2, 1}});

  // non-constant right factor is rejected
  TOperator bad{W, {}};
  bad.terms[DMulti{{1, 1}}] = ts_time(W, 1);
  CHECK_THROWS_AS(top_mul(d1, bad), Error);
  CHECK_NOTHROW(top_mul(bad, d1));

  Rat s;
  std::string wit;
  CHECK(top_proportional(top_scale(d1, Rat(3)), d1, s, wit));
  CHECK(s == 3);
  CHECK(!top_proportional(d1, d2, s, wit));
}

TEST_CASE("determinant operator frozen shapes") {
  const long W = 8;
  // N = 1: m! d/dt_m
  TOperator d1 = det_operator(3, 1, W);
  REQUIRE(d1.terms.size() == 1);
  CHECK(ts_const_part(d1.terms.at(DMulti{{3, 1}})) == 6);

  // N = 2: (1/2)((m! d/dt_m)^2 - (2m)! d/dt_2m)
  TOperator d2 = det_operator(2, 2, W);
  CHECK(ts_const_part(d2.terms.at(DMulti{{2, 2}})) == 2);  // (2!)^2 / 2
  CHECK(ts_const_part(d2.terms.at(DMulti{{4, 1}})) == -12); // -4!/2
  CHECK(d2.terms.size() == 2);

  CHECK(top_equal(det_operator(0, 2, W), top_identity(W)));
}

TEST_CASE("exponential eigen-application and Newton data") {
  const long W = 8;
  // frozen: x = (1,2,3), m = 1: det route must give e_1 * ... here
  // D^1_3 exp = x1 x2 x3 exp = 6 exp, from power sums (6, 14, 36).
  TOperator d = det_operator(1, 3, W);
  std::vector<Rat> xs{Rat(1), Rat(2), Rat(3)};
  TSeries s = top_apply_exp(d, xs);
  CHECK(ts_is_constant(s));
  CHECK(ts_const_part(s) == 6);

  // m = 2 on x = (1, 2): product 4
  TSeries s2 = top_apply_exp(det_operator(2, 2, W), {Rat(1), Rat(2)});
  CHECK(ts_is_constant(s2));
  CHECK(ts_const_part(s2) == 4);
}

TEST_CASE("multi-index operator") {
  const long W = 8;
  // base case: D_m = m! d/dt_m
  TOperator base = multi_index_operator({4}, W);
  REQUIRE(base.terms.size() == 1);
  CHECK(ts_const_part(base.terms.at(DMulti{{4, 1}})) == 24);

  // equal indices reduce to N! times the determinant operator
  CHECK(top_equal(multi_index_operator({2, 2}, W), top_scale(det_operator(2, 2, W), Rat(2))));

  // defining property at concrete points: sum over permutations
  std::vector<Rat> xs{Rat(2), Rat(3)};
  TOperator d = multi_index_operator({1, 2}, W);
  TSeries s = top_apply_exp(d, xs);
  CHECK(ts_is_constant(s));
  // 2^1 3^2 + 2^2 3^1 = 30
  CHECK(ts_const_part(s) == 30);

  CHECK(top_equal(multi_index_operator({}, W), top_identity(W)));
}

TEST_CASE("xseries ring") {
  XSeries e = xs_exp(xs_gen_arg(4, 4, 4, Rat(1)));
  // coefficient of x^1 is t1
  CHECK(ts_equal(xs_coeff(e, 1), ts_time(4, 1)));
  // coefficient of x^2 is (t1^2 + t2)/2
  TSeries c2 = xs_coeff(e, 2);
  CHECK(ts_coeff(c2, TMono{{1, 2}}) == Rat(1) / 2);
  CHECK(ts_coeff(c2, TMono{{2, 1}}) == Rat(1) / 2);

  // exp(a) exp(-a) = 1 under the shared caps
  XSeries inv = xs_exp(xs_gen_arg(4, 4, 4, Rat(-1)));
  XSeries one = xs_mul(e, inv);
  CHECK(one.c.size() == 1);
  CHECK(ts_const_part(xs_coeff(one, 0)) == 1);
}
