#include <algorithm>
#include <set>

#include "checks_util.hpp"
#include "rpq/multi_operator.hpp"
#include "rpq/w_single.hpp"

namespace rpq::checks {

namespace {

std::string mop_mismatch_str(const MopMismatch& w) {
  std::ostringstream os;
  os << "mode " << modes_str(w.mode) << " -> " << modes_str(w.target)
     << ": lhs " << rat_to_string(w.lhs) << ", rhs " << rat_to_string(w.rhs);
  return os.str();
}

void expect_mop_equal(CheckRecord& rec, const MultiOp& a, const MultiOp& b,
                      const std::string& label) {
  if (auto w = mop_diff_witness(a, b))
    set_fail(rec, label + ": " + mop_mismatch_str(*w));
}

void expect_mop_zero(CheckRecord& rec, const MultiOp& a, const std::string& label) {
  if (mop_is_zero(a)) return;
  for (const auto& [mode, row] : a.act)
    for (const auto& [target, c] : row) {
      set_fail(rec, label + " nonzero at mode " + modes_str(mode) + " -> " +
                        modes_str(target) + ": " + rat_to_string(c));
      return;
    }
}

} // namespace

void dj_commuting(const CheckContext& ctx, const Sink& sink) {
  const auto& d = *ctx.d;
  for (int N : {2, 3}) {
    const long w = N == 3 ? std::min(ctx.window, 6L) : std::min(ctx.window, 8L);
    guarded(sink, json{{"N", N}}, [&](CheckRecord& rec) {
      for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
          auto c = mop_commutator(mop_Dj(d, N, w, i), mop_Dj(d, N, w, j));
          expect_mop_zero(rec, c, "coordinate pair (" + std::to_string(i) + "," +
                                      std::to_string(j) + ")");
          if (rec.status == "fail") return;
        }
    });
  }
}

void vbar_commutator(const CheckContext& ctx, const Sink& sink) {
  const auto& d = *ctx.d;
  const long w = std::min(ctx.window, 8L);
  struct Combo {
    std::vector<long> r, s;
  };
  const std::vector<Combo> combos{
      {{2, 1}, {1, 1}}, {{2, 1}, {1, 2}}, {{1, 1}, {1, 1}}, {{2, 2}, {1, 1}}};
  const std::vector<std::pair<std::vector<long>, std::vector<long>>> mode_pairs{
      {{1, 0}, {0, 1}}, {{0, 2}, {1, 0}}};
  for (const auto& cb : combos) {
    if (std::max(*std::max_element(cb.r.begin(), cb.r.end()),
                 *std::max_element(cb.s.begin(), cb.s.end())) > ctx.max_rank)
      continue;
    guarded(sink, json{{"ranks-left", modes_str(cb.r)}, {"ranks-right", modes_str(cb.s)}},
            [&](CheckRecord& rec) {
              for (const auto& [m, n] : mode_pairs) {
                auto lhs = mop_commutator(make_Vbar(d, w, m, cb.r),
                                          make_Vbar(d, w, n, cb.s));
                auto rhs = vbar_pair_rhs(d, w, m, cb.r, n, cb.s);
                expect_mop_equal(rec, lhs, rhs,
                                 "modes " + modes_str(m) + "," + modes_str(n));
                if (rec.status == "fail") return;
              }
            });
  }
  guarded(sink, json{{"ranks-left", "(1,1)"}, {"ranks-right", "(1,1)"},
                     {"part", "abelian-rank1"}},
          [&](CheckRecord& rec) {
            auto lhs = mop_commutator(make_Vbar(d, w, {2, 1}, {1, 1}),
                                      make_Vbar(d, w, {1, 2}, {1, 1}));
            expect_mop_zero(rec, lhs, "rank-1 commutator");
          });
}

void vbar_nbracket(const CheckContext& ctx, const Sink& sink) {
  const auto& d = *ctx.d;
  const long w = std::min(ctx.window, 8L);
  if (ctx.arity_cap < 3) return;
  guarded(sink, json{{"arity", 3}}, [&](CheckRecord& rec) {
    const std::vector<std::vector<long>> modes{{1, 0}, {0, 1}, {1, 1}};
    const std::vector<std::vector<long>> ranks{{2, 1}, {1, 2}, {1, 1}};
    std::vector<MultiOp> ops;
    std::vector<long> mode_sum(2, 0), rank_sum(2, 0);
    for (size_t i = 0; i < modes.size(); ++i) {
      ops.push_back(make_Vbar(d, w, modes[i], ranks[i]));
      for (int j = 0; j < 2; ++j) {
        mode_sum[j] += modes[i][j];
        rank_sum[j] += ranks[i][j] - 1;
      }
    }
    for (int j = 0; j < 2; ++j) rank_sum[j] += 1;
    auto bracket = mop_n_bracket(ops);
    auto target = make_Vbar(d, w, mode_sum, rank_sum);
    Rat scalar;
    std::string witness;
    if (!mop_proportional(bracket, target, scalar, witness))
      set_fail(rec, witness);
    else
      rec.note = "closure shape holds with scalar " + rat_to_string(scalar);
  });
}

void wbar_commutator(const CheckContext& ctx, const Sink& sink) {
  const auto& d = *ctx.d;
  const long w = std::min(ctx.window, 8L);
  const int N = 2;
  const long rcap = std::min(3L, ctx.max_rank);
  for (long r = 1; r <= rcap; ++r)
    for (long s = 1; s <= rcap; ++s)
      guarded(sink, json{{"r", r}, {"s", s}}, [&](CheckRecord& rec) {
        for (auto [m, n] : std::vector<std::pair<long, long>>{{1, 1}, {0, 2}}) {
          auto lhs = mop_commutator(make_Wbar(d, N, w, m, r),
                                    make_Wbar(d, N, w, n, s));
          auto rhs = wbar_pair_rhs(d, N, w, m, r, n, s);
          expect_mop_equal(rec, lhs, rhs,
                           "(m,n)=(" + std::to_string(m) + "," +
                               std::to_string(n) + ")");
          if (rec.status == "fail") return;
        }
      });

  guarded(sink, json{{"part", "one-coordinate-reduction"}}, [&](CheckRecord& rec) {
    for (long r = 1; r <= rcap; ++r)
      for (long m : {1L, 2L}) {
        auto reduced = make_Wbar(d, 1, w, m, r);
        GradedOperator single = op_identity(-w, w);
        for (long i = 0; i < r - 1; ++i)
          single = op_compose(make_derivative(d, w), single);
        single = op_scale(op_compose(single, make_zpow(w, m + r - 1)),
                          Rat(r % 2 ? -1 : 1));
        const long lo = std::max(reduced.lo, single.lo);
        const long hi = std::min(reduced.hi, single.hi);
        for (long mode = lo; mode <= hi; ++mode) {
          std::map<long, Rat> red_row, sgl_row;
          if (auto it = reduced.act.find({mode}); it != reduced.act.end())
            for (const auto& [t, c] : it->second) red_row[t[0]] = c;
          if (auto it = single.act.find(mode); it != single.act.end())
            sgl_row = it->second;
          std::set<long> targets;
          for (const auto& [t, c] : red_row) targets.insert(t);
          for (const auto& [t, c] : sgl_row) targets.insert(t);
          for (long t : targets) {
            Rat a = red_row.count(t) ? red_row[t] : Rat(0);
            Rat b = sgl_row.count(t) ? sgl_row[t] : Rat(0);
            if (a != b) {
              set_fail(rec, "(m,r)=(" + std::to_string(m) + "," + std::to_string(r) +
                                ") mode " + std::to_string(mode) + " -> " +
                                std::to_string(t) + ": summed " + rat_to_string(a) +
                                ", ladder " + rat_to_string(b));
              return;
            }
          }
        }
      }
  });

  guarded(sink, json{{"part", "summed-from-symmetrized"}}, [&](CheckRecord& rec) {
    for (long m : {1L, 2L}) {
      auto two = make_Wbar(d, 2, w, m, 1);
      expect_mop_equal(rec, two, mop_scale(make_Vbar(d, w, {m, 0}, {1, 1}), Rat(-1)),
                       "N=2, m=" + std::to_string(m));
      if (rec.status == "fail") return;
      const long w3 = std::min(ctx.window, 6L);
      auto three = make_Wbar(d, 3, w3, m, 1);
      expect_mop_equal(rec, three,
                       mop_scale(make_Vbar(d, w3, {m, 0, 0}, {1, 1, 1}), Rat(1, 2)),
                       "N=3, m=" + std::to_string(m));
      if (rec.status == "fail") return;
    }
  });
}

} // namespace rpq::checks
