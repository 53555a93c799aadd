#include <doctest.h>

#include "rpq/errors.hpp"
#include "rpq/w_single.hpp"

using namespace rpq;

namespace {
constexpr long kW = 10;

Deformation pq_ref() { return Deformation::two_param(Rat(1, 2), Rat(1, 3)); }
Deformation q_ref() { return Deformation::one_param(Rat(1, 3)); }

GradedOperator derivative_power(const Deformation& d, long w, long k) {
  GradedOperator g = op_identity(-w, w);
  for (long i = 0; i < k; ++i) g = op_compose(make_derivative(d, w), g);
  return g;
}
} // namespace

TEST_CASE("generator construction routes agree") {
  for (const auto& d : {pq_ref(), q_ref()}) {
    for (long r : {1L, 2L, 3L}) {
      for (long m : {-1L, 0L, 2L}) {
        auto direct = make_W(d, kW, m, r);
        auto composed =
            op_compose(make_zpow(kW, m + r - 1), derivative_power(d, kW, r - 1));
        CHECK_FALSE(op_diff_witness(direct, composed, -kW, kW).has_value());
      }
    }
    // rank 1 is plain multiplication
    CHECK_FALSE(op_diff_witness(make_W(d, kW, 3, 1), make_zpow(kW, 3), -kW, kW)
                    .has_value());
    // derivative tower base is -D^m
    for (long m : {0L, 1L, 3L}) {
      auto base = make_calW(d, kW, 1, m);
      auto composed = op_scale(derivative_power(d, kW, m), Rat(-1));
      CHECK_FALSE(op_diff_witness(base, composed, -kW, kW).has_value());
    }
  }
  CHECK_THROWS_AS(make_W(pq_ref(), kW, 0, 0), Error);
}

TEST_CASE("fock ladder relations") {
  for (const auto& d : {pq_ref(), q_ref()}) {
    auto down_up = op_compose(fock_lower(d, kW), fock_raise(kW));
    CHECK_FALSE(op_diff_witness(down_up, fock_number_diag(d, kW, 1), -kW + 1,
                                kW - 1)
                    .has_value());
    auto up_down = op_compose(fock_raise(kW), fock_lower(d, kW));
    CHECK_FALSE(
        op_diff_witness(up_down, fock_number_diag(d, kW, 0), -kW + 1, kW - 1)
            .has_value());
  }
}

TEST_CASE("derivative tower recursion disagrees with the closed expansion") {
  auto d = pq_ref();
  const Rat two = d.number(2), three = d.number(3); // 5/6, 19/36
  auto rec = make_calW_recursive(d, kW, 2, 1);
  auto closed = make_calW(d, kW, 2, 1);
  CHECK(rec.act.at(1).at(0) == three * two / 6);
  CHECK(rec.act.at(1).at(0) == make_rat(95, 1296));
  CHECK(closed.act.at(1).at(0) == two / 2);
  CHECK(closed.act.at(1).at(0) == make_rat(5, 12));
  CHECK(op_diff_witness(rec, closed, -kW, kW).has_value());
  // the explicit rank-2 display x D^{m+1} + ((m+1)/2) D^m differs from both
  auto explicit_disp =
      op_add(op_compose(make_zpow(kW, 1), derivative_power(d, kW, 2)),
             derivative_power(d, kW, 1));
  CHECK(explicit_disp.act.at(1).at(0) == Rat(1));
  CHECK(op_diff_witness(rec, explicit_disp, -kW + 2, kW - 2).has_value());
  CHECK(op_diff_witness(closed, explicit_disp, -kW + 2, kW - 2).has_value());

  CHECK_THROWS_AS(make_calW_recursive(d, kW, 2, -2), Error);
  CHECK_THROWS_AS(make_calW(d, kW, 1, -1), Error);
  CHECK_THROWS_AS(make_calW(d, kW, 3, -4), Error);
  // deeper recursion stays on the full requested window
  auto deep = make_calW_recursive(d, 12, 4, 3);
  CHECK(deep.lo == -12);
  CHECK(deep.hi == 12);
}

TEST_CASE("pair bracket right-hand sides") {
  SUBCASE("one-parameter family closes on the quadratic display") {
    auto d = q_ref();
    for (auto [m, n] : {std::pair<long, long>{1, 2}, {0, 3}, {-1, 1}}) {
      auto general = pair_rhs(d, kW, m, 2, n, 2);
      auto quadratic = pair_rank2_rhs(d, kW, m, n);
      CHECK_FALSE(op_diff_witness(general, quadratic, -kW, kW).has_value());
      auto comm = op_commutator(make_W(d, kW, m, 2), make_W(d, kW, n, 2));
      CHECK_FALSE(op_diff_witness(comm, quadratic, comm.lo, comm.hi).has_value());
    }
    // ladder coefficients at (m, n) = (1, 2): ranks 2 and 3 only
    auto comm = op_commutator(make_W(d, kW, 1, 2), make_W(d, kW, 2, 2));
    auto sol = ladder_solve(d, comm, 3, 2);
    REQUIRE(sol.has_value());
    CHECK(sol->size() == 2);
    CHECK(sol->at(2) == pow_rat(d.q(), 3) - pow_rat(d.q(), 2));
    CHECK(sol->at(1) == d.number(3) - d.number(2));
  }
  SUBCASE("two-parameter family leaves the display span") {
    auto d = pq_ref();
    auto comm = op_commutator(make_W(d, kW, 1, 2), make_W(d, kW, 2, 2));
    CHECK(op_diff_witness(comm, pair_rank2_rhs(d, kW, 1, 2), comm.lo, comm.hi)
              .has_value());
    CHECK(op_diff_witness(comm, pair_rhs(d, kW, 1, 2, 2, 2), comm.lo, comm.hi)
              .has_value());
    CHECK_FALSE(ladder_solve(d, comm, 3, 2).has_value());
  }
  SUBCASE("arity-2 closure formula reduces to the pair formula") {
    for (const auto& d : {pq_ref(), q_ref()}) {
      long dropped = 0;
      // zero total mode: the even-arity prefactor is 1
      auto nar = n_algebra_rhs(d, kW, {2, -2}, {3, 2}, &dropped);
      auto pair = pair_rhs(d, kW, 2, 3, -2, 2);
      CHECK(dropped == 0);
      CHECK_FALSE(op_diff_witness(nar, pair, -kW, kW).has_value());
      // nonzero total mode: they differ by exactly that prefactor
      auto nar2 = n_algebra_rhs(d, kW, {1, 2}, {2, 2});
      auto scaled = op_scale(pair_rhs(d, kW, 1, 2, 2, 2),
                             d.bracket_prefactor(3, 2));
      CHECK_FALSE(op_diff_witness(nar2, scaled, -kW, kW).has_value());
    }
  }
  SUBCASE("rank-1 pair right-hand side cancels") {
    auto d = pq_ref();
    CHECK(op_is_zero(n_algebra_rhs(d, kW, {2, 3}, {1, 1})));
    CHECK(op_is_zero(op_commutator(make_W(d, kW, 2, 1), make_W(d, kW, 3, 1))));
  }
}

TEST_CASE("vanishing brackets: forced ones hold, the scaling-vector triple does not") {
  for (const auto& d : {pq_ref(), q_ref()}) {
    // pairwise-commuting generators: the full antisymmetrization is zero
    auto R = [&](long m) { return make_R(d, kW, m); };
    CHECK(op_is_zero(n_bracket({R(0), R(1), R(3)})));
    CHECK(op_is_zero(
        n_bracket({make_W(d, kW, 0, 1), make_W(d, kW, 1, 1), make_W(d, kW, 2, 1),
                   make_W(d, kW, 4, 1)})));
    // the triple bracket of -x^{m+1} D generators survives deformation
    auto L = [&](long m) { return make_L(d, kW, m); };
    CHECK_FALSE(op_is_zero(n_bracket({L(0), L(1), L(2)})));
    CHECK_FALSE(op_is_zero(n_bracket({L(-1), L(1), L(2)})));
  }
  // frozen witness: coefficient -[1]([4]([3]-[2]) - [3]([3]-[1]) + [2]([2]-[1]))
  auto dq = q_ref();
  auto b = n_bracket({make_L(dq, kW, 0), make_L(dq, kW, 1), make_L(dq, kW, 2)});
  CHECK(b.act.at(1).at(4) == make_rat(8, 243));
}

TEST_CASE("central extension scalars") {
  auto d = pq_ref();
  SUBCASE("frozen single-mode example") {
    CHECK(central_example(d, 2, Rat(1)) == make_rat(95, 416));
    CHECK(central_example(d, 0, Rat(1)) == 0);
  }
  SUBCASE("general pairing vs the worked example") {
    // ratio (1 + p^{-4m}) / 2 at m = 2, p = 1/2: 257/2
    auto general = central_C(d, {2, -2}, Rat(1), false);
    CHECK(general == make_rat(95, 416) * make_rat(257, 2));
    CHECK(general == make_rat(24415, 832));
    // one-parameter family: the two agree
    auto dq = q_ref();
    CHECK(central_C(dq, {2, -2}, Rat(1), false) == central_example(dq, 2, Rat(1)));
    // the 1/6 normalization is twice the 1/12 one
    CHECK(central_C(d, {2, -2}, Rat(1), true) == general * 2);
  }
  SUBCASE("pairing-compatibility residual") {
    CHECK(cocycle_residual(d, {1, 2, -3}, 1, Rat(1)) ==
          make_rat(-32928425, 6144));
    CHECK(cocycle_residual(d, {2, 3, -1}, 1, Rat(1)) == 0);
  }
  SUBCASE("alternant scalar") {
    // carries the even-arity normalization (p^-M + q^-M)/2 at total mode M
    CHECK(central_f(d, {1, 2}) ==
          d.bracket_prefactor(3, 2) * (d.number(3) - d.number(2)));
    CHECK(d.bracket_prefactor(3, 2) == make_rat(35, 2));
    CHECK(central_f(d, {2, 2}) == 0);
  }
}

TEST_CASE("leading structure functions are alternating") {
  auto d = pq_ref();
  std::vector<long> m4{1, 2, 3, 4}, s4{2, 3, 2, 3};
  auto base = structure_f4(d, m4, s4);
  CHECK(base != 0);
  CHECK(structure_f4(d, {2, 1, 3, 4}, {3, 2, 2, 3}) == -base);
  CHECK(structure_f4(d, {1, 1, 3, 4}, {2, 2, 2, 3}) == 0);
  std::vector<long> m5{1, 2, 3, 4, 5}, s5{2, 2, 3, 2, 2};
  auto base5 = structure_g5(d, m5, s5);
  CHECK(structure_g5(d, {2, 1, 3, 4, 5}, {2, 2, 3, 2, 2}) == -base5);
  CHECK(structure_g5(d, {1, 1, 3, 4, 5}, {2, 2, 3, 2, 2}) == 0);
}

TEST_CASE("multibracket contraction constant") {
  for (const auto& d : {pq_ref(), q_ref()}) {
    CHECK(multibracket_constant(d, 1) == Rat(1));
    // matches the displayed 1/4 of the rank-2 triple bracket
    CHECK(multibracket_constant(d, 2) == make_rat(1, 4));
  }
}

TEST_CASE("ladder decomposition") {
  auto d = pq_ref();
  SUBCASE("closed tower operator decomposes with its displayed coefficients") {
    auto op = make_calW(d, kW, 3, 1);
    auto sol = ladder_solve(d, op, -1, 5);
    REQUIRE(sol.has_value());
    CHECK(sol->size() == 3);
    CHECK(sol->at(3) == Rat(-1));
    CHECK(sol->at(2) == -d.binomial(2, 1) * d.falling(3, 1) / 2);
    CHECK(sol->at(1) == -d.binomial(2, 2) * d.falling(3, 2) / 4);
  }
  SUBCASE("mode-inhomogeneous operators are rejected") {
    auto mixed = op_add(make_zpow(kW, 1), make_derivative(d, kW));
    CHECK_FALSE(ladder_solve(d, mixed, 1, 4).has_value());
  }
  SUBCASE("functions outside the span are rejected") {
    GradedOperator g = op_zero(-kW, kW);
    for (long n = -kW; n <= kW; ++n) {
      Rat v = d.number(n);
      op_insert(g, n, n, v * v);
    }
    op_finalize(g);
    CHECK_FALSE(ladder_solve(d, g, 0, 1).has_value());
  }
  SUBCASE("window must separate the candidate ranks") {
    auto op = make_calW(d, 1, 2, 0);
    CHECK_THROWS_AS(ladder_solve(d, op, 0, 5), Error);
  }
  SUBCASE("zero operator has the empty decomposition") {
    auto sol = ladder_solve(d, op_zero(-kW, kW), 0, 3);
    REQUIRE(sol.has_value());
    CHECK(sol->empty());
  }
}

TEST_CASE("proportionality helper") {
  auto d = pq_ref();
  Rat scalar;
  std::string witness;
  auto a = make_W(d, kW, 1, 2);
  CHECK(op_proportional(op_scale(a, make_rat(7, 3)), a, -kW, kW, scalar, witness));
  CHECK(scalar == make_rat(7, 3));
  CHECK_FALSE(
      op_proportional(make_W(d, kW, 1, 3), a, -kW, kW, scalar, witness));
  CHECK_FALSE(witness.empty());
  CHECK(op_proportional(op_zero(-kW, kW), op_zero(-kW, kW), -kW, kW, scalar,
                        witness));
  CHECK(scalar == Rat(1));
  CHECK_FALSE(op_proportional(a, op_zero(-kW, kW), -kW, kW, scalar, witness));
}
