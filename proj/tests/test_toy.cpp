#include <doctest.h>

#include <map>

#include "rpq/errors.hpp"
#include "rpq/matrix_model.hpp"
#include "rpq/toy.hpp"

using namespace rpq;

namespace {
Deformation pq_ref() { return Deformation::two_param(Rat(1, 2), Rat(1, 3)); }
Deformation q_ref() { return Deformation::one_param(Rat(1, 3)); }

// all times set to zero: DMulti -> constant coefficient
std::map<DMulti, Rat> zero_time_slice(const TOperator& op) {
  std::map<DMulti, Rat> out;
  for (const auto& [dm, series] : op.terms) {
    Rat c = ts_const_part(series);
    if (c != 0) out[dm] = c;
  }
  return out;
}
} // namespace

TEST_CASE("constraint tower: general route matches the printed expansions") {
  for (const auto& d : {pq_ref(), q_ref()}) {
    for (long r : {2L, 3L, 4L}) {
      for (int N : {1, 2}) {
        for (long m : {2L, 4L}) {
          long drop_a = 0, drop_b = 0;
          auto a = make_wtilde(d, N, m, r, 8, 6, &drop_a);
          auto b = make_wtilde_lowrank(d, N, m, r, 8, 6, &drop_b);
          CHECK(drop_a == drop_b);
          CHECK(top_equal(a, b));
        }
      }
    }
    CHECK_THROWS_AS(make_wtilde_lowrank(d, 1, 2, 5, 8, 6), Error);
  }
}

TEST_CASE("constraint tower: structure of the rank-1 operator") {
  auto d = pq_ref();
  // r = 1: single degenerate branch, m! d/dt_m with no time dependence
  auto op = make_wtilde(d, 1, 3, 1, 8, 6);
  auto slice = zero_time_slice(op);
  REQUIRE(slice.size() == 1);
  DMulti dm{{3, 1}};
  CHECK(slice.at(dm) == factorial_int(3) * pow_rat(d.p(), 3));
  CHECK(op.terms.size() == 1);
  CHECK(ts_is_constant(op.terms.at(dm)));
}

TEST_CASE("constraint tower: derivative indices outside the window are counted") {
  auto d = pq_ref();
  long dropped = 0;
  make_wtilde(d, 2, 1, 3, 2, 6, &dropped); // low kcap forces drops
  CHECK(dropped > 0);
}

TEST_CASE("theta-style product") {
  SUBCASE("pairing scalar at the default substitution") {
    // both built-in kernels are nonzero at (1, 0); G(1, 1) = 1/q
    CHECK(theta_G(pq_ref(), 1, 1) == Rat(3));
    CHECK(theta_G(q_ref(), 1, 1) == Rat(3));
  }
  SUBCASE("truncated product values") {
    auto d = pq_ref();
    CHECK(theta_eval(d, Rat(2), 0, 1, 1) == Rat(1));
    // one factor: (1 - F(x) G)(1 - F((q/p)/x) G)
    Rat g = theta_G(d, 1, 1);
    Rat expect = (1 - theta_F(d, Rat(2)) * g) * (1 - theta_F(d, make_rat(1, 3)) * g);
    CHECK(theta_eval(d, Rat(2), 1, 1, 1) == expect);
    CHECK_THROWS_AS(theta_eval(d, Rat(0), 1, 1, 1), Error);
  }
}

TEST_CASE("toy model: time route against the expansion route") {
  SUBCASE("zero-time slice matches with the generator sign for every rank") {
    for (const auto& d : {pq_ref(), q_ref()}) {
      for (long a : {1L, 2L}) {
        for (long gamma : {0L, 1L}) {
          for (long r : {1L, 2L, 3L}) {
            for (long m : {0L, 1L, 2L}) {
              auto t = toy_time_route(d, a, gamma, m, r, 6, 6);
              auto x = toy_x_route(d, a, gamma, m, r, 6, 6);
              auto st = zero_time_slice(t);
              auto sx = zero_time_slice(x);
              REQUIRE(st.size() == sx.size());
              for (const auto& [dm, c] : st) {
                REQUIRE(sx.count(dm) == 1);
                CHECK(c == -sx.at(dm));
              }
            }
          }
        }
      }
    }
  }
  SUBCASE("full series agree at rank 1 only") {
    // The expansion route carries Bell polynomials in the rescaled times
    // t_s (p^{as} - 1); no global scalar times B_n(t) matches that shape,
    // so past rank 1 the two routes only share the zero-time slice.
    Rat scalar;
    std::string witness;
    for (const auto& d : {pq_ref(), q_ref()}) {
      auto t = toy_time_route(d, 2, 1, 2, 1, 6, 6);
      auto x = toy_x_route(d, 2, 1, 2, 1, 6, 6);
      CHECK(top_proportional(t, x, scalar, witness));
      CHECK(scalar == Rat(-1));
      for (long r : {2L, 3L}) {
        auto tr = toy_time_route(d, 2, 1, 2, r, 6, 6);
        auto xr = toy_x_route(d, 2, 1, 2, r, 6, 6);
        CHECK_FALSE(top_proportional(tr, xr, scalar, witness));
        CHECK_FALSE(witness.empty());
      }
    }
  }
  SUBCASE("rank-2 deviation witness, checked by hand") {
    // a = 2, gamma = 1, m = 2, so the rank-2 time route puts
    // q^{2*4} (3!/1!) [1]_{a} t_1 on d/dt_3, while the expansion route
    // puts 3! ([5]_{a} - [4]_{a}) t_1 there (a-deformed brackets).
    auto d = pq_ref();
    auto t = toy_time_route(d, 2, 1, 2, 2, 6, 6);
    auto x = toy_x_route(d, 2, 1, 2, 2, 6, 6);
    DMulti d3{{3, 1}};
    TMono t1{{1, 1}};
    REQUIRE(t.terms.count(d3) == 1);
    REQUIRE(x.terms.count(d3) == 1);
    CHECK(ts_coeff(t.terms.at(d3), t1) == make_rat(2, 2187));
    CHECK(ts_coeff(x.terms.at(d3), t1) == make_rat(33791, 279936));
    // constant parts still pair with ratio -1
    DMulti d2{{2, 1}};
    CHECK(ts_const_part(t.terms.at(d2)) == -ts_const_part(x.terms.at(d2)));

    // built-in one-parameter family: the weight-1 terms happen to agree
    // ([M+1] - [M] = q^{aM} at p = 1) and the first break is the t_1^2
    // coefficient on d/dt_4, where the ratio flips sign to (1+q^a)/(1-q^a)
    auto dq = q_ref();
    auto tq = toy_time_route(dq, 2, 1, 2, 2, 6, 6);
    auto xq = toy_x_route(dq, 2, 1, 2, 2, 6, 6);
    CHECK(ts_coeff(tq.terms.at(d3), t1) == -ts_coeff(xq.terms.at(d3), t1));
    DMulti d4{{4, 1}};
    TMono t11{{1, 2}};
    TMono t2{{2, 1}};
    Rat qa = make_rat(1, 9); // q^a
    CHECK(ts_coeff(tq.terms.at(d4), t2) == -ts_coeff(xq.terms.at(d4), t2));
    CHECK(ts_coeff(tq.terms.at(d4), t11) * (1 - qa) ==
          ts_coeff(xq.terms.at(d4), t11) * (1 + qa));
  }
}
