#include <algorithm>

#include "checks_util.hpp"
#include "rpq/matrix_model.hpp"
#include "rpq/toperator.hpp"
#include "rpq/tseries.hpp"

namespace rpq::checks {

namespace {

std::string top_mismatch_str(const TopMismatch& w) {
  std::ostringstream os;
  os << "derivative " << dmulti_to_string(w.d) << ": lhs " << rat_to_string(w.lhs)
     << ", rhs " << rat_to_string(w.rhs);
  return os.str();
}

std::string rats_str(const std::vector<Rat>& xs) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << rat_to_string(xs[i]);
  os << ")";
  return os.str();
}

} // namespace

void bell_oracle(const CheckContext& ctx, const Sink& sink) {
  const long kmax = 8;
  auto direct = bell_coefficients(kmax);
  auto recursive = bell_recursion(kmax);
  guarded(sink, json{{"part", "routes-agree"}, {"kmax", kmax}},
          [&](CheckRecord& rec) {
            for (long k = 0; k <= kmax; ++k)
              if (!ts_equal(direct[k], recursive[k])) {
                set_fail(rec, "weight " + std::to_string(k) + ": generating-product " +
                                  ts_to_string(direct[k]) + ", recursion " +
                                  ts_to_string(recursive[k]));
                return;
              }
          });
  guarded(sink, json{{"part", "weight-homogeneous"}, {"kmax", kmax}},
          [&](CheckRecord& rec) {
            for (long k = 0; k <= kmax; ++k)
              for (const auto& [mono, c] : direct[k].c)
                if (tmono_weight(mono) != k) {
                  set_fail(rec, "weight-" + std::to_string(k) +
                                    " polynomial carries a weight-" +
                                    std::to_string(tmono_weight(mono)) + " monomial");
                  return;
                }
          });
  (void)ctx;
}

void det_property(const CheckContext& ctx, const Sink& sink) {
  const long wcap = 8;
  struct Case {
    int N;
    long mmax;
    std::vector<Rat> xs;
  };
  const std::vector<Case> cases{{1, 4, {Rat(2)}},
                                {2, 3, {Rat(1), Rat(2)}},
                                {2, 3, {Rat(2), Rat(3)}},
                                {3, 3, {Rat(1), Rat(2), Rat(3)}}};
  for (const auto& cs : cases)
    guarded(sink, json{{"N", cs.N}, {"points", rats_str(cs.xs)}},
            [&](CheckRecord& rec) {
              for (long m = 0; m <= cs.mmax; ++m) {
                auto T = det_operator(m, cs.N, wcap);
                auto s = top_apply_exp(T, cs.xs);
                Rat want(1);
                for (const auto& x : cs.xs) want *= pow_rat(x, m);
                if (!ts_is_constant(s)) {
                  set_fail(rec, "m=" + std::to_string(m) +
                                    ": cofactor is not constant: " + ts_to_string(s));
                  return;
                }
                expect_rat_equal(rec, ts_const_part(s), want,
                                 "m=" + std::to_string(m) + " cofactor");
                if (rec.status == "fail") return;
              }
            });
  (void)ctx;
}

void multi_index_det(const CheckContext& ctx, const Sink& sink) {
  const long wcap = 8;
  guarded(sink, json{{"part", "permutation-sum"}}, [&](CheckRecord& rec) {
    struct Case {
      std::vector<long> modes;
      std::vector<Rat> xs;
    };
    for (const auto& cs : std::vector<Case>{
             {{1, 2}, {Rat(2), Rat(3)}}, {{2, 3}, {Rat(1), Rat(2)}}}) {
      auto s = top_apply_exp(multi_index_operator(cs.modes, wcap), cs.xs);
      Rat want(0);
      std::vector<size_t> perm(cs.modes.size());
      for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
      do {
        Rat term(1);
        for (size_t j = 0; j < perm.size(); ++j)
          term *= pow_rat(cs.xs[j], cs.modes[perm[j]]);
        want += term;
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (!ts_is_constant(s)) {
        set_fail(rec, "cofactor is not constant: " + ts_to_string(s));
        return;
      }
      expect_rat_equal(rec, ts_const_part(s), want,
                       "modes " + modes_str(cs.modes) + " at " + rats_str(cs.xs));
      if (rec.status == "fail") return;
    }
  });
  guarded(sink, json{{"part", "order-invariance"}}, [&](CheckRecord& rec) {
    auto a = multi_index_operator({1, 3}, wcap);
    auto b = multi_index_operator({3, 1}, wcap);
    if (auto w = top_diff_witness(a, b)) set_fail(rec, top_mismatch_str(*w));
  });
  guarded(sink, json{{"part", "equal-pair-reduction"}}, [&](CheckRecord& rec) {
    for (long m : {1L, 2L}) {
      auto a = multi_index_operator({m, m}, wcap);
      auto b = top_scale(det_operator(m, 2, wcap), Rat(2));
      if (auto w = top_diff_witness(a, b)) {
        set_fail(rec, "m=" + std::to_string(m) + ": " + top_mismatch_str(*w));
        return;
      }
    }
  });
  guarded(sink, json{{"part", "empty-identity"}}, [&](CheckRecord& rec) {
    if (auto w = top_diff_witness(multi_index_operator({}, wcap), top_identity(wcap)))
      set_fail(rec, top_mismatch_str(*w));
  });
  guarded(sink, json{{"part", "single-derivative"}}, [&](CheckRecord& rec) {
    for (long m : {1L, 2L, 3L}) {
      auto lhs = multi_index_operator({m}, wcap);
      TOperator rhs = top_zero(wcap);
      top_add_term(rhs, DMulti{{m, 1}}, ts_const(wcap, factorial_int(m)));
      if (auto w = top_diff_witness(lhs, rhs)) {
        set_fail(rec, "m=" + std::to_string(m) + ": " + top_mismatch_str(*w));
        return;
      }
    }
  });
  (void)ctx;
}

void wtilde_specialization(const CheckContext& ctx, const Sink& sink) {
  const auto& d = *ctx.d;
  const long cap = ctx.t_order;
  for (long r : {2L, 3L, 4L})
    guarded(sink, json{{"r", r}}, [&](CheckRecord& rec) {
      long dropped_general = 0, dropped_lowrank = 0;
      for (int N : {1, 2})
        for (long m : {2L, 4L}) {
          long dg = 0, dl = 0;
          auto general = make_wtilde(d, N, m, r, cap, cap, &dg);
          auto lowrank = make_wtilde_lowrank(d, N, m, r, cap, cap, &dl);
          dropped_general += dg;
          dropped_lowrank += dl;
          if (auto w = top_diff_witness(general, lowrank)) {
            set_fail(rec, "N=" + std::to_string(N) + ", m=" + std::to_string(m) +
                              ": " + top_mismatch_str(*w));
            return;
          }
        }
      rec.note = "derivative indices outside [0, " + std::to_string(cap) +
                 "] dropped: " + std::to_string(dropped_general) + " general, " +
                 std::to_string(dropped_lowrank) + " low-rank";
    });
}

void theta_eval_check(const CheckContext& ctx, const Sink& sink) {
  const auto& d = *ctx.d;
  guarded(sink, json{{"part", "empty-product"}}, [&](CheckRecord& rec) {
    for (const Rat& x : {Rat(2, 3), Rat(-1, 2)})
      expect_rat_equal(rec, theta_eval(d, x, 0, 1, 1), Rat(1),
                       "zero factors at x = " + rat_to_string(x));
  });
  guarded(sink, json{{"part", "one-factor-decomposition"}}, [&](CheckRecord& rec) {
    for (const Rat& x : {Rat(2, 3), Rat(5, 7)})
      for (auto [P, Q] : std::vector<std::pair<long, long>>{{1, 1}, {2, 1}}) {
        Rat g = theta_G(d, P, Q);
        Rat inner = (d.q() / d.p()) / x;
        Rat want = (Rat(1) - theta_F(d, x) * g) * (Rat(1) - theta_F(d, inner) * g);
        expect_rat_equal(rec, theta_eval(d, x, 1, P, Q), want,
                         "x = " + rat_to_string(x) + ", (P,Q)=(" +
                             std::to_string(P) + "," + std::to_string(Q) + ")");
        if (rec.status == "fail") return;
      }
  });
  guarded(sink, json{{"part", "unit-arguments"}}, [&](CheckRecord& rec) {
    if (!d.is_builtin()) {
      rec.status = "skipped";
      rec.note = "closed unit-argument value is specific to the built-in kernels";
      return;
    }
    expect_rat_equal(rec, theta_G(d, 1, 1), Rat(1) / d.q(), "G at unit arguments");
  });
  guarded(sink, json{{"part", "pole-classified"}}, [&](CheckRecord& rec) {
    try {
      theta_eval(d, Rat(0), 1, 1, 1);
      set_fail(rec, "no pole reported at x = 0");
    } catch (const Error& e) {
      if (e.kind() != Err::PoleHit) throw;
      rec.note = "pole at x = 0 classified";
    }
  });
}

} // namespace rpq::checks
