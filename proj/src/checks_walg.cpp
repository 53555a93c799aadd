#include <algorithm>
#include <numeric>

#include "checks_util.hpp"
#include "rpq/w_single.hpp"

namespace rpq::checks {

void pair_commutator(const CheckContext& ctx, const Sink& sink) {
  const auto& d = *ctx.d;
  const long w = ctx.window;
  const long rcap = std::min(3L, ctx.max_rank);
  const std::vector<std::pair<long, long>> samples{{1, 2}, {0, -1}, {2, 0}, {-2, 3}};
  for (long r = 1; r <= rcap; ++r)
    for (long s = 1; s <= rcap; ++s)
      guarded(sink, json{{"r", r}, {"s", s}}, [&](CheckRecord& rec) {
        long dropped_total = 0;
        for (auto [m, n] : samples) {
          auto lhs = op_commutator(make_W(d, w, m, r), make_W(d, w, n, s));
          long dropped = 0;
          auto rhs = pair_rhs(d, w, m, r, n, s, &dropped);
          dropped_total += dropped;
          if (auto mis = op_diff_witness(lhs, rhs, -w, w)) {
            set_fail(rec, "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) +
                              "): " + mismatch_str(*mis));
            return;
          }
        }
        if (dropped_total > 0)
          rec.note = "rank targets below 1 dropped: " + std::to_string(dropped_total);
      });
}

void pair_commutator_quadratic(const CheckContext& ctx, const Sink& sink) {
  const auto& d = *ctx.d;
  const long w = ctx.window;
  if (ctx.max_rank < 3) return; // right-hand side carries a rank-3 term
  for (auto [m, n] : std::vector<std::pair<long, long>>{{1, 2}, {0, 3}, {-1, 1}, {2, -2}})
    guarded(sink, json{{"m", m}, {"n", n}}, [&](CheckRecord& rec) {
      auto lhs = op_commutator(make_W(d, w, m, 2), make_W(d, w, n, 2));
      auto rhs = pair_rank2_rhs(d, w, m, n);
      expect_op_equal(rec, lhs, rhs, -w, w);
    });
}

void n_algebra(const CheckContext& ctx, const Sink& sink) {
  const auto& d = *ctx.d;
  const long w = ctx.window;
  struct Tuple {
    std::vector<long> modes, ranks;
  };
  std::vector<Tuple> tuples{
      {{1, 2}, {2, 1}},
      {{0, -1}, {1, 2}},
      {{2, -2}, {2, 3}},
      {{1, 0, -1}, {2, 1, 2}},
      {{1, 2, 0}, {1, 1, 2}},
      {{2, -1, 1}, {2, 2, 1}},
      {{1, 0, -1, 2}, {1, 2, 1, 2}},
      {{0, 1, -1, -2}, {2, 1, 1, 2}},
      {{1, 0, 2, -1}, {1, 1, 2, 2}},
  };
  for (const auto& t : tuples) {
    const long arity = static_cast<long>(t.modes.size());
    if (arity > ctx.arity_cap) continue;
    if (*std::max_element(t.ranks.begin(), t.ranks.end()) > ctx.max_rank) continue;
    guarded(sink,
            json{{"arity", arity},
                 {"modes", modes_str(t.modes)},
                 {"ranks", modes_str(t.ranks)}},
            [&](CheckRecord& rec) {
              long total = 0;
              for (long m : t.modes) total += m;
              std::vector<GradedOperator> ops;
              for (size_t i = 0; i < t.modes.size(); ++i)
                ops.push_back(make_W(d, w, t.modes[i], t.ranks[i]));
              auto lhs = paper_bracket(d, ops, total);
              long dropped = 0;
              auto rhs = n_algebra_rhs(d, w, t.modes, t.ranks, &dropped);
              expect_op_equal(rec, lhs, rhs, -w, w);
              if (dropped > 0)
                rec.note = "rank targets below 1 dropped: " + std::to_string(dropped);
            });
  }
}

void sub2n_closure(const CheckContext& ctx, const Sink& sink) {
  const auto& d = *ctx.d;
  const long w = ctx.window;
  for (long n : {1L, 2L}) {
    const long s = n + 1;
    if (s > ctx.max_rank || 2 * n > ctx.arity_cap) continue;
    // Scaling constant: epsilon-contracted product of deformed binomials,
    // summed over permutations (a_1..a_{2n-1}) of 1..2n-1 with
    // b_1 = n and b_k = k n - a_1 - ... - a_{k-1}.
    Rat qn = 0;
    {
      std::vector<int> a(2 * n - 1);
      std::iota(a.begin(), a.end(), 1);
      do {
        Rat term(perm_sign(a));
        long used = 0;
        for (long k = 1; k <= 2 * n - 1; ++k) {
          term *= d.binomial_or_zero(k * n - used, a[k - 1]);
          used += a[k - 1];
        }
        qn += term;
      } while (std::next_permutation(a.begin(), a.end()));
    }
    std::vector<std::vector<long>> tuples =
        n == 1 ? std::vector<std::vector<long>>{{-1, 1}, {0, 2}, {1, 2}}
               : std::vector<std::vector<long>>{{-2, -1, 1, 2}, {-1, 0, 1, 2}};
    for (const auto& modes : tuples) {
      long total = 0;
      for (long m : modes) total += m;
      std::vector<GradedOperator> ops;
      for (long m : modes) ops.push_back(make_W(d, w, m, s));
      auto plain = n_bracket(ops);
      json base{{"n", n}, {"modes", modes_str(modes)}};

      auto with = [&](const char* part) {
        json p = base;
        p["part"] = part;
        return p;
      };
      guarded(sink, with("proportional"), [&](CheckRecord& rec) {
        auto target = make_W(d, w, total, s);
        Rat scalar;
        std::string witness;
        if (!op_proportional(plain, target, -w + 4, w - 4, scalar, witness))
          set_fail(rec, witness);
        else
          rec.note = "scalar " + rat_to_string(scalar);
      });
      guarded(sink, with("displayed-line"), [&](CheckRecord& rec) {
        rec.note = "scaling constant " + rat_to_string(qn) +
                   "; both sides carry the same even-arity normalization, "
                   "which cancels";
        Rat c = d.k_eigenvalue(total) * qn * d.vandermonde(modes, 1);
        auto rhs = op_scale(make_W(d, w, total, s), c);
        expect_op_equal(rec, plain, rhs, -w + 4, w - 4);
      });
    }
    // the next odd arity is displayed as identically zero
    if (2 * n + 1 > ctx.arity_cap) continue;
    std::vector<long> odd_modes;
    for (long m = -n; m <= n; ++m) odd_modes.push_back(m);
    guarded(sink,
            json{{"n", n}, {"modes", modes_str(odd_modes)},
                 {"part", "next-arity-vanishing"}},
            [&](CheckRecord& rec) {
              std::vector<GradedOperator> ops;
              for (long m : odd_modes) ops.push_back(make_W(d, w, m, s));
              expect_op_zero(rec, n_bracket(ops),
                             std::to_string(2 * n + 1) + "-fold bracket");
            });
  }
}

void central_cocycle(const CheckContext& ctx, const Sink& sink) {
  const auto& d = *ctx.d;
  for (long m : {1L, 2L, 3L})
    guarded(sink, json{{"part", "pair-value"}, {"m", m}}, [&](CheckRecord& rec) {
      Rat got = central_C(d, {m, -m}, Rat(1), false);
      Rat want = central_example(d, m, Rat(1));
      expect_rat_equal(rec, got, want, "paired modes (m,-m) vs single-mode value");
    });
  for (const auto& modes :
       std::vector<std::vector<long>>{{1, 2, -3}, {2, 3, -1}, {3, 1, -4}})
    guarded(sink, json{{"part", "pairing-compatibility"}, {"modes", modes_str(modes)}},
            [&](CheckRecord& rec) {
              Rat res = cocycle_residual(d, modes, 1, Rat(1));
              if (res != 0)
                set_fail(rec, "residual " + rat_to_string(res) + " at modes " +
                                  modes_str(modes));
            });
}

} // namespace rpq::checks
