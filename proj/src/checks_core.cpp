#include <algorithm>

#include "checks_util.hpp"
#include "rpq/laurent.hpp"
#include "rpq/toy.hpp"
#include "rpq/w_single.hpp"

namespace rpq::checks {

namespace {

GradedOperator derivative_power(const Deformation& d, long w, long k) {
  GradedOperator g = op_identity(-w, w);
  for (long i = 0; i < k; ++i) g = op_compose(make_derivative(d, w), g);
  return g;
}

LaurentPoly random_poly(std::mt19937_64& rng, long window) {
  std::uniform_int_distribution<long> deg(-2, 2), num(-5, 5), den(1, 5);
  LaurentPoly f = lp_zero(window);
  for (int i = 0; i < 3; ++i)
    f = lp_add(f, lp_monomial(window, deg(rng), make_rat(num(rng), den(rng))));
  if (f.coef.empty()) f = lp_monomial(window, 1, Rat(1));
  return f;
}

} // namespace

void fock_relations(const CheckContext& ctx, const Sink& sink) {
  const auto& d = *ctx.d;
  const long w = ctx.window;
  guarded(sink, json{{"relation", "lower-raise"}}, [&](CheckRecord& rec) {
    auto lhs = op_compose(fock_lower(d, w), fock_raise(w));
    expect_op_equal(rec, lhs, fock_number_diag(d, w, 1), -w + 1, w - 1);
  });
  guarded(sink, json{{"relation", "raise-lower"}}, [&](CheckRecord& rec) {
    auto lhs = op_compose(fock_raise(w), fock_lower(d, w));
    expect_op_equal(rec, lhs, fock_number_diag(d, w, 0), -w + 1, w - 1);
  });
  guarded(sink, json{{"relation", "number-lower"}}, [&](CheckRecord& rec) {
    auto lhs = op_commutator(fock_number(w), fock_lower(d, w));
    auto rhs = op_scale(fock_lower(d, w), Rat(-1));
    expect_op_equal(rec, lhs, rhs, lhs.lo, lhs.hi);
  });
  guarded(sink, json{{"relation", "number-raise"}}, [&](CheckRecord& rec) {
    auto lhs = op_commutator(fock_number(w), fock_raise(w));
    expect_op_equal(rec, lhs, fock_raise(w), lhs.lo, lhs.hi);
  });
}

void family_specialization(const CheckContext& ctx, const Sink& sink) {
  const Rat q = ctx.d->q();
  const json base{{"q", rat_to_string(q)}};
  auto with = [&](const char* part) {
    json p = base;
    p["part"] = part;
    return p;
  };
  const Deformation dq = Deformation::one_param(q);
  const Deformation d1 = Deformation::two_param(Rat(1), q);
  const long w = std::min(ctx.window, 8L);

  guarded(sink, with("numbers"), [&](CheckRecord& rec) {
    for (long n = -6; n <= 6; ++n)
      expect_rat_equal(rec, d1.number(n), dq.number(n),
                       "[" + std::to_string(n) + "]");
  });
  guarded(sink, with("factorial-grid"), [&](CheckRecord& rec) {
    for (long n = -3; n <= 5; ++n)
      for (long k = 0; k <= 3; ++k)
        expect_rat_equal(rec, d1.falling(n, k), dq.falling(n, k),
                         "falling(" + std::to_string(n) + "," + std::to_string(k) + ")");
    for (long n = 0; n <= 5; ++n)
      for (long k = 0; k <= n; ++k)
        expect_rat_equal(rec, d1.binomial(n, k), dq.binomial(n, k),
                         "binomial(" + std::to_string(n) + "," + std::to_string(k) + ")");
  });
  guarded(sink, with("pair-normalization"), [&](CheckRecord& rec) {
    for (long M = -3; M <= 3; ++M)
      expect_rat_equal(rec, d1.bracket_prefactor(M, 2), dq.bracket_prefactor(M, 2),
                       "prefactor(" + std::to_string(M) + ")");
  });
  guarded(sink, with("pair-display"), [&](CheckRecord& rec) {
    for (auto [m, r, n, s] : {std::array<long, 4>{1, 2, 2, 2}, {0, 3, 1, 2}}) {
      if (std::max(r, s) > ctx.max_rank) continue;
      auto a = pair_rhs(d1, w, m, r, n, s);
      auto b = pair_rhs(dq, w, m, r, n, s);
      expect_op_equal(rec, a, b, -w, w);
    }
  });
  guarded(sink, with("tower-generator"), [&](CheckRecord& rec) {
    const long s = std::min(3L, ctx.max_rank);
    expect_op_equal(rec, make_calW(d1, w, s, 1), make_calW(dq, w, s, 1), -w, w);
  });
  guarded(sink, with("constraint-route"), [&](CheckRecord& rec) {
    auto a = toy_time_route(d1, 2, 1, 2, 2, 4, 4);
    auto b = toy_time_route(dq, 2, 1, 2, 2, 4, 4);
    if (auto mis = top_diff_witness(a, b)) {
      set_fail(rec, "derivative " + dmulti_to_string(mis->d) + ": lhs " +
                        rat_to_string(mis->lhs) + ", rhs " + rat_to_string(mis->rhs));
    }
  });
}

void composition_associativity(const CheckContext& ctx, const Sink& sink) {
  auto rng = check_rng("composition-associativity", ctx.seed);
  const long w = ctx.window;
  guarded(sink, json{{"triples", 20}}, [&](CheckRecord& rec) {
    for (int i = 0; i < 20; ++i) {
      auto a = random_banded(rng, -w, w, 2);
      auto b = random_banded(rng, -w, w, 2);
      auto c = random_banded(rng, -w, w, 2);
      auto lhs = op_compose(op_compose(a, b), c);
      auto rhs = op_compose(a, op_compose(b, c));
      if (auto mis = op_diff_witness(lhs, rhs, -w, w)) {
        set_fail(rec, "triple " + std::to_string(i) + ": " + mismatch_str(*mis));
        return;
      }
    }
  });
}

void bracket_antisymmetry(const CheckContext& ctx, const Sink& sink) {
  auto rng = check_rng("bracket-antisymmetry", ctx.seed);
  const int top = static_cast<int>(std::min(6L, ctx.arity_cap));
  const int tuples_for[7] = {0, 0, 15, 12, 10, 7, 6};
  for (int arity = 2; arity <= top; ++arity) {
    const long w = arity >= 5 ? std::min(ctx.window, 6L) : ctx.window;
    const int tuples = tuples_for[arity];
    guarded(sink, json{{"arity", arity}, {"tuples", tuples}},
            [&](CheckRecord& rec) {
              std::uniform_int_distribution<int> pick(0, arity - 1);
              for (int t = 0; t < tuples; ++t) {
                std::vector<GradedOperator> ops;
                for (int i = 0; i < arity; ++i)
                  ops.push_back(random_banded(rng, -w, w, 1));
                auto b1 = n_bracket(ops);
                int i = pick(rng), j = pick(rng);
                if (i == j) j = (j + 1) % arity;
                std::swap(ops[i], ops[j]);
                auto b2 = n_bracket(ops);
                expect_op_zero(rec, op_add(b1, b2),
                               "tuple " + std::to_string(t) + " transposition sum");
                if (rec.status == "fail") return;
              }
              // one duplicate-argument tuple per arity
              std::vector<GradedOperator> ops;
              for (int i = 0; i < arity; ++i)
                ops.push_back(random_banded(rng, -w, w, 1));
              ops[arity - 1] = ops[0];
              expect_op_zero(rec, n_bracket(ops), "duplicate-argument bracket");
            });
  }
}

void jacobi_gji(const CheckContext& ctx, const Sink& sink) {
  const auto& d = *ctx.d;
  const long w = ctx.window;
  guarded(sink, json{{"arity", 2}, {"operands", "quadratic-realization"}},
          [&](CheckRecord& rec) {
            const long rcap = std::min(3L, ctx.max_rank);
            const std::vector<std::vector<std::pair<long, long>>> triples{
                {{1, 1}, {0, 2}, {-1, 2}},
                {{2, 2}, {-2, 3}, {0, 1}},
                {{1, 3}, {-1, 3}, {2, 2}}};
            for (const auto& tri : triples) {
              std::vector<GradedOperator> ops;
              for (auto [m, r] : tri)
                ops.push_back(make_W(d, w, m, std::min(r, rcap)));
              expect_op_zero(rec, gji_residual(ops, 2), "pair-residual");
              if (rec.status == "fail") return;
            }
          });
  guarded(sink, json{{"arity", 2}, {"operands", "random"}},
          [&](CheckRecord& rec) {
            auto rng = check_rng("jacobi-gji", ctx.seed);
            for (int rep = 0; rep < 5; ++rep) {
              std::vector<GradedOperator> ops;
              for (int i = 0; i < 3; ++i)
                ops.push_back(random_banded(rng, -w, w, 2));
              expect_op_zero(rec, gji_residual(ops, 2),
                             "random triple " + std::to_string(rep));
              if (rec.status == "fail") return;
            }
          });
  guarded(sink, json{{"arity", 4}, {"operands", "quadratic-realization"}},
          [&](CheckRecord& rec) {
            const long rcap = std::min(2L, ctx.max_rank);
            const long modes[7] = {-1, 0, 1, 1, -1, 0, 1};
            const long ranks[7] = {1, 2, 2, 1, 2, 1, 2};
            std::vector<GradedOperator> ops;
            for (int i = 0; i < 7; ++i)
              ops.push_back(make_W(d, w, modes[i], std::min(ranks[i], rcap)));
            expect_op_zero(rec, gji_residual(ops, 4), "even-arity residual");
          });
}

void gji_odd_arity_probe(const CheckContext& ctx, const Sink& sink) {
  const auto& d = *ctx.d;
  const long w = ctx.window;
  guarded(sink, json{{"arity", 3}}, [&](CheckRecord& rec) {
    const long rcap = std::min(2L, ctx.max_rank);
    const long modes[5] = {1, -1, 1, 0, 2};
    const long ranks[5] = {2, 2, 1, 2, 1};
    std::vector<GradedOperator> ops;
    for (int i = 0; i < 5; ++i)
      ops.push_back(make_W(d, w, modes[i], std::min(ranks[i], rcap)));
    auto res = gji_residual(ops, 3);
    if (!op_is_zero(res)) {
      const auto& [mode, row] = *res.act.begin();
      const auto& [target, c] = *row.begin();
      rec.note = "residual nonzero as expected, e.g. mode " +
                 std::to_string(mode) + " -> " + std::to_string(target) + ": " +
                 rat_to_string(c);
      return;
    }
    auto rng = check_rng("gji-odd-arity-probe", ctx.seed);
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<GradedOperator> rnd;
      for (int i = 0; i < 5; ++i) rnd.push_back(random_banded(rng, -w, w, 1));
      if (!op_is_zero(gji_residual(rnd, 3))) {
        rec.note = "residual nonzero on random operands, attempt " +
                   std::to_string(rep);
        return;
      }
    }
    set_fail(rec, "no nonzero odd-arity residual found on any probe");
  });
}

void gji_paper_mode(const CheckContext& ctx, const Sink& sink) {
  const auto& d = *ctx.d;
  const long w = ctx.window;
  // Residual of the mode-weighted bracket, mirroring the combination form:
  // each inner bracket carries the normalization at its own mode subtotal,
  // the outer one at the full total.
  auto weighted_residual = [&](const std::vector<GradedOperator>& ops,
                               const std::vector<long>& modes, int arity) {
    const int total = 2 * arity - 1;
    long m_tot = 0;
    for (long m : modes) m_tot += m;
    GradedOperator acc;
    bool init = false;
    std::vector<int> select(total, 0);
    std::fill(select.begin(), select.begin() + arity, 1);
    std::sort(select.begin(), select.end(), std::greater<int>());
    do {
      std::vector<int> inner_idx, outer_idx;
      for (int i = 0; i < total; ++i)
        (select[i] ? inner_idx : outer_idx).push_back(i);
      std::vector<int> arrangement = inner_idx;
      arrangement.insert(arrangement.end(), outer_idx.begin(), outer_idx.end());
      Rat sgn(perm_sign(arrangement));
      long m_inner = 0;
      std::vector<GradedOperator> inner_ops;
      for (int i : inner_idx) {
        inner_ops.push_back(ops[i]);
        m_inner += modes[i];
      }
      std::vector<GradedOperator> outer_ops;
      outer_ops.push_back(paper_bracket(d, inner_ops, m_inner));
      for (int i : outer_idx) outer_ops.push_back(ops[i]);
      GradedOperator term = op_scale(paper_bracket(d, outer_ops, m_tot), sgn);
      acc = init ? op_add(acc, term) : term;
      init = true;
    } while (std::prev_permutation(select.begin(), select.end()));
    return acc;
  };

  guarded(sink, json{{"arity", 2}}, [&](CheckRecord& rec) {
    const long rcap = std::min(2L, ctx.max_rank);
    for (const auto& tri : {std::vector<long>{1, 2, -1}, {0, 1, -1}}) {
      const long ranks[3] = {2, 2, 1};
      std::vector<GradedOperator> ops;
      for (int i = 0; i < 3; ++i)
        ops.push_back(make_W(d, w, tri[i], std::min(ranks[i], rcap)));
      expect_op_zero(rec, weighted_residual(ops, tri, 2),
                     "weighted pair residual at modes " + modes_str(tri));
      if (rec.status == "fail") return;
    }
  });
  guarded(sink, json{{"arity", 4}}, [&](CheckRecord& rec) {
    const long rcap = std::min(2L, ctx.max_rank);
    const std::vector<long> modes{-1, 0, 1, 1, -1, 0, 1};
    const long ranks[7] = {1, 2, 2, 1, 2, 1, 2};
    std::vector<GradedOperator> ops;
    for (int i = 0; i < 7; ++i)
      ops.push_back(make_W(d, w, modes[i], std::min(ranks[i], rcap)));
    expect_op_zero(rec, weighted_residual(ops, modes, 4),
                   "weighted even-arity residual");
  });
}

void nambu_form_equality(const CheckContext& ctx, const Sink& sink) {
  auto rng = check_rng("nambu-form-equality", ctx.seed);
  const long w = ctx.window;
  std::vector<std::array<GradedOperator, 3>> triples;
  for (int t = 0; t < 50; ++t)
    triples.push_back({random_banded(rng, -w, w, 1), random_banded(rng, -w, w, 1),
                       random_banded(rng, -w, w, 1)});
  auto left_form = [](const std::array<GradedOperator, 3>& a) {
    auto t1 = op_compose(a[0], op_commutator(a[1], a[2]));
    auto t2 = op_compose(a[1], op_commutator(a[2], a[0]));
    auto t3 = op_compose(a[2], op_commutator(a[0], a[1]));
    return op_add(op_add(t1, t2), t3);
  };
  auto right_form = [](const std::array<GradedOperator, 3>& a) {
    auto t1 = op_compose(op_commutator(a[1], a[2]), a[0]);
    auto t2 = op_compose(op_commutator(a[2], a[0]), a[1]);
    auto t3 = op_compose(op_commutator(a[0], a[1]), a[2]);
    return op_add(op_add(t1, t2), t3);
  };
  guarded(sink, json{{"comparison", "left-vs-right"}, {"triples", 50}},
          [&](CheckRecord& rec) {
            for (size_t t = 0; t < triples.size(); ++t) {
              auto l = left_form(triples[t]), r = right_form(triples[t]);
              if (auto mis = op_diff_witness(l, r, -w, w)) {
                set_fail(rec, "triple " + std::to_string(t) + ": " + mismatch_str(*mis));
                return;
              }
            }
          });
  guarded(sink, json{{"comparison", "left-vs-antisymmetrized"}, {"triples", 50}},
          [&](CheckRecord& rec) {
            for (size_t t = 0; t < triples.size(); ++t) {
              auto l = left_form(triples[t]);
              auto b = n_bracket({triples[t][0], triples[t][1], triples[t][2]});
              if (auto mis = op_diff_witness(l, b, -w, w)) {
                set_fail(rec, "triple " + std::to_string(t) + ": " + mismatch_str(*mis));
                return;
              }
            }
          });
}

void leibniz(const CheckContext& ctx, const Sink& sink) {
  const auto& d = *ctx.d;
  const long w = std::max(ctx.window, 6L);
  auto rng = check_rng("leibniz", ctx.seed);
  auto der = make_derivative(d, w);
  auto apply_pow = [&](const LaurentPoly& f, long k) {
    LaurentPoly g = f;
    for (long i = 0; i < k; ++i) g = op_apply(der, g);
    return g;
  };
  auto first_diff = [](const LaurentPoly& a, const LaurentPoly& b) {
    for (const auto& [deg, c] : a.coef) {
      auto it = b.coef.find(deg);
      Rat other = it == b.coef.end() ? Rat(0) : it->second;
      if (c != other)
        return "degree " + std::to_string(deg) + ": lhs " + rat_to_string(c) +
               ", rhs " + rat_to_string(other);
    }
    for (const auto& [deg, c] : b.coef)
      if (a.coef.find(deg) == a.coef.end())
        return "degree " + std::to_string(deg) + ": lhs 0, rhs " + rat_to_string(c);
    return std::string();
  };

  for (long r = 1; r <= std::min(4L, ctx.max_rank); ++r) {
    std::vector<std::pair<LaurentPoly, LaurentPoly>> pairs;
    for (int i = 0; i < 3; ++i)
      pairs.emplace_back(random_poly(rng, w), random_poly(rng, w));
    auto run = [&](CheckRecord& rec, bool derive_first) {
      for (size_t i = 0; i < pairs.size(); ++i) {
        const auto& [f, g] = pairs[i];
        auto lhs = apply_pow(lp_mul(f, g), r);
        LaurentPoly rhs = lp_zero(w);
        for (long j = 0; j <= r; ++j) {
          const Rat qs = pow_rat(d.q(), r - j), ps = pow_rat(d.p(), j);
          LaurentPoly fa = derive_first ? lp_scale_arg(apply_pow(f, j), qs)
                                        : apply_pow(lp_scale_arg(f, qs), j);
          LaurentPoly gb = derive_first ? lp_scale_arg(apply_pow(g, r - j), ps)
                                        : apply_pow(lp_scale_arg(g, ps), r - j);
          rhs = lp_add(rhs, lp_scale(lp_mul(fa, gb), d.binomial(r, j)));
        }
        if (!lp_equal(lhs, rhs)) {
          set_fail(rec, "pair " + std::to_string(i) + ", " + first_diff(lhs, rhs));
          return;
        }
      }
    };
    guarded(sink, json{{"r", r}, {"reading", "derive-then-scale"}},
            [&](CheckRecord& rec) { run(rec, true); });
    guarded(sink, json{{"r", r}, {"reading", "scale-then-derive"}},
            [&](CheckRecord& rec) { run(rec, false); });
  }
}

} // namespace rpq::checks
