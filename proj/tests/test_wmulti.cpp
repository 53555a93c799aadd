#include <doctest.h>

#include "rpq/errors.hpp"
#include "rpq/multi_operator.hpp"

using namespace rpq;

namespace {
Deformation pq_ref() { return Deformation::two_param(Rat(1, 2), Rat(1, 3)); }
Deformation q_ref() { return Deformation::one_param(Rat(1, 3)); }
} // namespace

TEST_CASE("lattice operator ring") {
  auto d = pq_ref();
  const long w = 4;
  SUBCASE("identity and composition") {
    auto dx = mop_Dj(d, 2, w, 0);
    auto composed = mop_compose(mop_identity(2, w), dx);
    CHECK_FALSE(mop_diff_witness(composed, dx).has_value());
    CHECK_THROWS_AS(mop_compose(dx, mop_Dj(d, 3, w, 0)), Error);
  }
  SUBCASE("composition window shrinks per coordinate") {
    auto dx = mop_Dj(d, 2, w, 0);
    auto twice = mop_compose(dx, dx);
    CHECK(twice.lo == -w + 1);
    CHECK(twice.hi == w);
    ModeVec n{2, 1};
    ModeVec t{0, 1};
    CHECK(twice.act.at(n).at(t) == d.number(2) * d.number(1));
  }
  SUBCASE("scaling and subtraction") {
    auto dx = mop_Dj(d, 2, w, 0);
    CHECK(mop_is_zero(mop_sub(dx, dx)));
    CHECK(mop_is_zero(mop_scale(dx, Rat(0))));
  }
}

TEST_CASE("coordinate derivatives commute") {
  for (const auto& d : {pq_ref(), q_ref()}) {
    for (int nvars : {2, 3}) {
      const long w = (nvars == 2) ? 4 : 3;
      for (int i = 0; i < nvars; ++i)
        for (int j = i + 1; j < nvars; ++j)
          CHECK(mop_is_zero(mop_commutator(mop_Dj(d, nvars, w, i),
                                           mop_Dj(d, nvars, w, j))));
    }
  }
}

TEST_CASE("symmetrized generator matrix elements") {
  auto d = pq_ref();
  const long w = 4;
  // two coordinates, ranks (2,1), modes (1,0): both permutation terms
  auto v = make_Vbar(d, w, {1, 0}, {2, 1});
  ModeVec n{1, 2};
  CHECK(v.act.at(n).at(ModeVec{2, 2}) == -d.number(3));
  CHECK(v.act.at(n).at(ModeVec{1, 3}) == -d.number(4));
  CHECK(d.number(4) == make_rat(65, 216));
  // rank-1 everywhere: pure symmetrized multiplication, no derivative factor
  auto low = make_Vbar(d, w, {2, 1}, {1, 1});
  CHECK(low.act.at(n).at(ModeVec{3, 3}) == Rat(1));
  CHECK(low.act.at(n).at(ModeVec{2, 4}) == Rat(1));
  CHECK_THROWS_AS(make_Vbar(d, w, {1, 0}, {0, 1}), Error);
}

TEST_CASE("summed generator from the symmetrized one") {
  for (const auto& d : {pq_ref(), q_ref()}) {
    const long w = 4;
    for (long r : {1L, 2L, 3L}) {
      for (long m : {-1L, 0L, 2L}) {
        auto direct = make_Wbar(d, 2, w, m, r);
        auto via = mop_scale(make_Vbar(d, w, {m, 0}, {r, 1}), Rat(-1));
        CHECK_FALSE(mop_diff_witness(direct, via).has_value());
      }
    }
    // N = 3 spot check: divide by (N-1)! = 2, sign (+1)^{N-1}
    auto direct3 = make_Wbar(d, 3, 3, 1, 2);
    auto via3 = mop_scale(make_Vbar(d, 3, {1, 0, 0}, {2, 1, 1}), make_rat(1, 2));
    CHECK_FALSE(mop_diff_witness(direct3, via3).has_value());
  }
}

TEST_CASE("rank-1 symmetrized generators commute") {
  auto d = pq_ref();
  const long w = 4;
  auto a = make_Vbar(d, w, {1, 2}, {1, 1});
  auto b = make_Vbar(d, w, {-1, 1}, {1, 1});
  CHECK(mop_is_zero(mop_commutator(a, b)));
  // and the displayed right-hand side of their bracket is zero too
  CHECK(mop_is_zero(vbar_pair_rhs(d, w, {1, 2}, {1, 1}, {-1, 1}, {1, 1})));
}

TEST_CASE("displayed pair right-hand sides evaluate") {
  auto d = pq_ref();
  const long w = 4;
  // structure only: both must be finite operators on the box
  auto rhs = vbar_pair_rhs(d, w, {1, 0}, {2, 1}, {0, 1}, {1, 2});
  CHECK(rhs.N == 2);
  auto wrhs = wbar_pair_rhs(d, 2, w, 1, 2, 0, 2);
  CHECK(wrhs.N == 2);
  CHECK_THROWS_AS(wbar_pair_rhs(d, 2, w, 1, 0, 0, 2), Error);
}

TEST_CASE("lattice proportionality helper") {
  auto d = pq_ref();
  Rat scalar;
  std::string witness;
  auto a = make_Wbar(d, 2, 4, 1, 2);
  CHECK(mop_proportional(mop_scale(a, make_rat(-5, 7)), a, scalar, witness));
  CHECK(scalar == make_rat(-5, 7));
  CHECK_FALSE(mop_proportional(make_Wbar(d, 2, 4, 1, 3), a, scalar, witness));
  CHECK_FALSE(witness.empty());
}
