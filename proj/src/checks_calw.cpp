#include <algorithm>
#include <array>
#include <map>
#include <optional>

#include "checks_util.hpp"
#include "rpq/w_single.hpp"

namespace rpq::checks {

namespace {

GradedOperator derivative_power(const Deformation& d, long w, long k) {
  GradedOperator g = op_identity(-w, w);
  for (long i = 0; i < k; ++i) g = op_compose(make_derivative(d, w), g);
  return g;
}

std::string pair_str(long n, long m) {
  return "(n,m)=(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

} // namespace

void calw_commuting(const CheckContext& ctx, const Sink& sink) {
  const auto& d = *ctx.d;
  const long w = ctx.window;
  const long top = 4; // rank-1 tower modes are nonnegative
  guarded(sink, json{{"pair", "rank1-tower"}}, [&](CheckRecord& rec) {
    rec.note = "grid 0..4 both slots; negative modes lie outside the tower domain";
    for (long m = 0; m <= top; ++m)
      for (long n = m; n <= top; ++n) {
        auto c = op_commutator(make_calW(d, w, 1, m), make_calW(d, w, 1, n));
        expect_op_zero(rec, c, pair_str(m, n));
        if (rec.status == "fail") return;
      }
  });
  guarded(sink, json{{"pair", "scaling-generators"}}, [&](CheckRecord& rec) {
    for (long m = 0; m <= top; ++m)
      for (long n = m; n <= top; ++n) {
        auto c = op_commutator(make_R(d, w, m), make_R(d, w, n));
        expect_op_zero(rec, c, pair_str(m, n));
        if (rec.status == "fail") return;
      }
  });
}

void calw_recursive_closed(const CheckContext& ctx, const Sink& sink) {
  const auto& d = *ctx.d;
  const long w = ctx.window;
  for (long s = 2; s <= std::min(4L, ctx.max_rank); ++s)
    for (long m = std::max(1 - s, -3L); m <= 3; ++m) {
      guarded(sink, json{{"comparison", "recursive-vs-closed"}, {"s", s}, {"m", m}},
              [&](CheckRecord& rec) {
                auto rcv = make_calW_recursive(d, w, s, m);
                auto cls = make_calW(d, w, s, m);
                expect_op_equal(rec, rcv, cls, -w, w);
              });
      if (s != 2) continue;
      auto explicit_rank2 = [&]() {
        auto first = op_compose(make_zpow(w, 1), derivative_power(d, w, m + 1));
        auto second = op_scale(derivative_power(d, w, m), Rat(m + 1, 2));
        return op_add(first, second);
      };
      guarded(sink, json{{"comparison", "recursive-vs-displayed-rank2"}, {"s", s}, {"m", m}},
              [&](CheckRecord& rec) {
                expect_op_equal(rec, make_calW_recursive(d, w, s, m), explicit_rank2(),
                                -w, w);
              });
      guarded(sink, json{{"comparison", "closed-vs-displayed-rank2"}, {"s", s}, {"m", m}},
              [&](CheckRecord& rec) {
                expect_op_equal(rec, make_calW(d, w, s, m), explicit_rank2(), -w, w);
              });
    }
}

void first_commutators_calw(const CheckContext& ctx, const Sink& sink) {
  const auto& d = *ctx.d;
  const long w = ctx.window;
  auto cw = [&](long s, long m) { return make_calW(d, w, s, m); };
  auto nb = [&](long x) { return d.number(x); };

  auto line = [&](json params, const std::vector<std::pair<long, long>>& samples,
                  const std::function<GradedOperator(long, long)>& lhs,
                  const std::function<GradedOperator(long, long)>& rhs) {
    guarded(sink, std::move(params), [&](CheckRecord& rec) {
      for (auto [n, m] : samples) {
        if (auto mis = op_diff_witness(lhs(n, m), rhs(n, m), -w, w)) {
          set_fail(rec, pair_str(n, m) + ": " + mismatch_str(*mis));
          return;
        }
      }
    });
  };

  line(json{{"line", "w1w1"}}, {{0, 1}, {2, 3}, {4, 0}},
       [&](long n, long m) { return op_commutator(cw(1, n), cw(1, m)); },
       [&](long, long) { return op_zero(-w, w); });
  line(json{{"line", "w2w1"}}, {{1, 1}, {0, 2}, {-1, 3}},
       [&](long n, long m) { return op_commutator(cw(2, n), cw(1, m)); },
       [&](long n, long m) { return op_scale(cw(1, n + m), nb(-m)); });
  line(json{{"line", "w2w2"}}, {{1, 2}, {-1, 1}, {0, 2}},
       [&](long n, long m) { return op_commutator(cw(2, n), cw(2, m)); },
       [&](long n, long m) { return op_scale(cw(2, n + m), nb(n) - nb(m)); });
  if (ctx.max_rank >= 3) {
    line(json{{"line", "w3w1"}, {"reading", "-[2m]"}}, {{1, 1}, {-1, 2}, {-2, 1}},
         [&](long n, long m) { return op_commutator(cw(3, n), cw(1, m)); },
         [&](long n, long m) { return op_scale(cw(2, n + m), -nb(2 * m)); });
    line(json{{"line", "w3w1"}, {"reading", "+[-2m]"}}, {{1, 1}, {-1, 2}, {-2, 1}},
         [&](long n, long m) { return op_commutator(cw(3, n), cw(1, m)); },
         [&](long n, long m) { return op_scale(cw(2, n + m), nb(-2 * m)); });
    line(json{{"line", "w3w2"}}, {{1, 1}, {-1, 1}, {2, 0}},
         [&](long n, long m) { return op_commutator(cw(3, n), cw(2, m)); },
         [&](long n, long m) {
           auto lead = op_scale(cw(3, n + m), nb(n) - nb(2 * m));
           auto tail = op_scale(cw(1, n + m),
                                Rat(1, 4) * nb(n + 2) * nb(m + 1) * nb(m));
           return op_add(lead, tail);
         });
  }
  if (ctx.max_rank >= 4)
    line(json{{"line", "w3w3"}}, {{1, 2}, {-1, 1}, {2, 2}},
         [&](long n, long m) { return op_commutator(cw(3, n), cw(3, m)); },
         [&](long n, long m) {
           auto lead = op_scale(cw(4, n + m), nb(2 * n) - nb(2 * m));
           auto tail = op_scale(
               cw(2, n + m),
               Rat(-1, 2) * (nb(n) - nb(m)) * nb(n + 2) * nb(m + 2));
           return op_add(lead, tail);
         });
}

void nambu_3algebra_calw(const CheckContext& ctx, const Sink& sink) {
  const auto& d = *ctx.d;
  const long w = ctx.window;
  auto cw = [&](long s, long m) { return make_calW(d, w, s, m); };
  auto nb = [&](long x) { return d.number(x); };

  auto tri = [&](json params, const std::vector<std::array<long, 3>>& samples,
                 const std::function<GradedOperator(const std::array<long, 3>&)>& lhs,
                 const std::function<GradedOperator(const std::array<long, 3>&)>& rhs) {
    guarded(sink, std::move(params), [&](CheckRecord& rec) {
      for (const auto& ms : samples) {
        if (auto mis = op_diff_witness(lhs(ms), rhs(ms), -w, w)) {
          set_fail(rec, "modes " + modes_str({ms[0], ms[1], ms[2]}) + ": " +
                            mismatch_str(*mis));
          return;
        }
      }
    });
  };

  tri(json{{"line", "w2w2w2"}}, {{{-1, 0, 1}}, {{0, 1, 2}}, {{-1, 1, 2}}},
      [&](const auto& ms) {
        return n_bracket({cw(2, ms[0]), cw(2, ms[1]), cw(2, ms[2])});
      },
      [&](const auto& ms) {
        Rat c = Rat(1, 4) * (nb(ms[2]) - nb(ms[1])) * (nb(ms[2]) - nb(ms[0])) *
                (nb(ms[1]) - nb(ms[0]));
        return op_scale(cw(1, ms[0] + ms[1] + ms[2]), c);
      });
  tri(json{{"line", "w2w2w1"}}, {{{0, 1, 1}}, {{-1, 2, 0}}, {{1, 2, 3}}},
      [&](const auto& ms) {
        return n_bracket({cw(2, ms[0]), cw(2, ms[1]), cw(1, ms[2])});
      },
      [&](const auto& ms) {
        return op_scale(cw(2, ms[0] + ms[1] + ms[2]), nb(ms[1]) - nb(ms[0]));
      });
  tri(json{{"line", "w2w1w1"}}, {{{1, 0, 2}}, {{0, 1, 2}}, {{2, 1, 0}}},
      [&](const auto& ms) {
        return n_bracket({cw(2, ms[0]), cw(1, ms[1]), cw(1, ms[2])});
      },
      [&](const auto& ms) {
        return op_scale(cw(1, ms[0] + ms[1] + ms[2]), nb(ms[1]) - nb(ms[2]));
      });
  tri(json{{"line", "w2w1w1-null-variant"}}, {{{1, 0, 2}}, {{0, 1, 2}}, {{2, 1, 0}}},
      [&](const auto& ms) {
        return n_bracket({cw(2, ms[0]), cw(1, ms[1]), cw(1, ms[2])});
      },
      [&](const auto&) { return op_zero(-w, w); });
  tri(json{{"line", "scaling-vector-triple"}}, {{{0, 1, 2}}, {{-1, 0, 1}}},
      [&](const auto& ms) {
        return n_bracket(
            {make_L(d, w, ms[0]), make_L(d, w, ms[1]), make_L(d, w, ms[2])});
      },
      [&](const auto&) { return op_zero(-w, w); });
}

void virasoro_witt_3algebra(const CheckContext& ctx, const Sink& sink) {
  const auto& d = *ctx.d;
  const long w = ctx.window;
  auto nb = [&](long x) { return d.number(x); };
  const std::vector<std::pair<long, long>> pairs{{1, 2}, {0, 1}, {2, 3}};
  const std::vector<std::array<long, 3>> triples{{0, 1, 2}, {1, 2, 3}, {0, 2, 3}};

  for (const Rat& nu : {Rat(0), Rat(1, 3), Rat(1, 2)}) {
    auto F = [&](long m) { return make_F(d, w, m, nu); };
    auto R = [&](long m) { return make_R(d, w, m); };
    const Rat disc = Rat(1, 4) - nu * nu;
    json base{{"nu", rat_to_string(nu)}};
    auto with = [&](const char* l) {
      json p = base;
      p["line"] = l;
      return p;
    };

    auto pair_line = [&](const char* label,
                         const std::function<GradedOperator(long, long)>& lhs,
                         const std::function<GradedOperator(long, long)>& rhs) {
      guarded(sink, with(label), [&](CheckRecord& rec) {
        for (auto [n, m] : pairs) {
          if (auto mis = op_diff_witness(lhs(n, m), rhs(n, m), -w, w)) {
            set_fail(rec, pair_str(n, m) + ": " + mismatch_str(*mis));
            return;
          }
        }
      });
    };
    pair_line("ff",
              [&](long n, long m) { return op_commutator(F(n), F(m)); },
              [&](long n, long m) { return op_scale(F(n + m), nb(n) - nb(m)); });
    pair_line("fr",
              [&](long n, long m) { return op_commutator(F(n), R(m)); },
              [&](long n, long m) { return op_scale(R(n + m), nb(-m)); });
    pair_line("rr",
              [&](long n, long m) { return op_commutator(R(n), R(m)); },
              [&](long, long) { return op_zero(-w, w); });

    auto tri_line = [&](const char* label,
                        const std::function<GradedOperator(long, long, long)>& lhs,
                        const std::function<GradedOperator(long, long, long)>& rhs) {
      guarded(sink, with(label), [&](CheckRecord& rec) {
        for (const auto& t : triples) {
          long k = t[0], m = t[1], n = t[2];
          if (auto mis = op_diff_witness(lhs(k, m, n), rhs(k, m, n), -w, w)) {
            set_fail(rec, "(k,m,n)=(" + std::to_string(k) + "," +
                              std::to_string(m) + "," + std::to_string(n) +
                              "): " + mismatch_str(*mis));
            return;
          }
        }
      });
    };
    tri_line("fff",
             [&](long k, long m, long n) { return n_bracket({F(k), F(m), F(n)}); },
             [&](long k, long m, long n) {
               Rat c = disc * (nb(n) - nb(m)) * (nb(n) - nb(k)) * (nb(m) - nb(k));
               return op_scale(R(k + m + n), c);
             });
    tri_line("ffr",
             [&](long k, long m, long n) { return n_bracket({F(k), F(m), R(n)}); },
             [&](long k, long m, long n) {
               auto lead = op_scale(F(k + m + n), nb(m) - nb(k));
               auto tail = op_scale(R(k + m + n),
                                    (nb(m) - nb(k)) * Rat(-2) * nu * nb(n));
               return op_add(lead, tail);
             });
    tri_line("frr",
             [&](long k, long m, long n) { return n_bracket({F(k), R(m), R(n)}); },
             [&](long k, long m, long n) {
               return op_scale(R(k + m + n), nb(m) - nb(n));
             });
    tri_line("rrr",
             [&](long k, long m, long n) { return n_bracket({R(k), R(m), R(n)}); },
             [&](long, long, long) { return op_zero(-w, w); });

    // Rescaled generators clear to rational identities only away from the
    // degenerate coupling where the rescaling factor vanishes.
    if (disc == 0) {
      CheckRecord rec;
      rec.params = with("hatted");
      rec.status = "skipped";
      rec.note = "rescaling factor 1/4 - nu^2 vanishes; hatted generators undefined";
      sink(rec);
      continue;
    }
    tri_line("hatted-fff",
             [&](long k, long m, long n) { return n_bracket({F(k), F(m), F(n)}); },
             [&](long k, long m, long n) {
               Rat c = -disc * (nb(n) - nb(m)) * (nb(n) - nb(k)) * (nb(k) - nb(m));
               return op_scale(R(k + m + n), c);
             });
    tri_line("hatted-ffr",
             [&](long k, long m, long n) { return n_bracket({F(k), F(m), R(n)}); },
             [&](long k, long m, long n) {
               auto lead = op_scale(F(k + m + n), -(nb(k) - nb(m)));
               auto tail = op_scale(R(k + m + n),
                                    (nb(k) - nb(m)) * Rat(2) * nu * nb(n));
               return op_add(lead, tail);
             });
    tri_line("hatted-frr",
             [&](long k, long m, long n) { return n_bracket({F(k), R(m), R(n)}); },
             [&](long k, long m, long n) {
               return op_scale(R(k + m + n), -(nb(n) - nb(m)));
             });
    tri_line("hatted-rrr",
             [&](long k, long m, long n) { return n_bracket({R(k), R(m), R(n)}); },
             [&](long, long, long) { return op_zero(-w, w); });
  }
}

void four_algebra_w3(const CheckContext& ctx, const Sink& sink) {
  const auto& d = *ctx.d;
  const long w = ctx.window;
  if (ctx.max_rank < 3 || ctx.arity_cap < 4) return;
  auto cw = [&](long s, long m) { return make_calW(d, w, s, m); };
  auto nb = [&](long x) { return d.number(x); };
  auto bracket = [&](const std::vector<long>& modes, const std::vector<long>& ranks) {
    long total = 0;
    std::vector<GradedOperator> ops;
    for (size_t i = 0; i < modes.size(); ++i) {
      ops.push_back(cw(ranks[i], modes[i]));
      total += modes[i];
    }
    return paper_bracket(d, ops, total);
  };

  guarded(sink, json{{"line", "w3x4"}, {"modes", "(-2,-1,1,2)"}},
          [&](CheckRecord& rec) {
            const std::vector<long> ms{-2, -1, 1, 2};
            Rat v4 = d.vandermonde(ms, 0);
            Rat s1 = 0, s2 = 0;
            for (size_t j = 0; j < 4; ++j) {
              for (size_t k = j + 1; k < 4; ++k) s1 += nb(ms[j]) * nb(ms[k]);
              s2 += Rat(6) * nb(ms[j]) + nb(ms[j]) * nb(ms[j]);
            }
            auto rhs = op_add(
                op_scale(cw(3, 0), Rat(-9, 2) * v4),
                op_scale(cw(1, 0), Rat(1, 8) * v4 * (Rat(3) * s1 + s2 + Rat(9))));
            expect_op_equal(rec, bracket(ms, {3, 3, 3, 3}), rhs, -w, w);
          });
  guarded(sink, json{{"line", "w3w3w3w1"}, {"modes", "(-2,-1,1,2)"}},
          [&](CheckRecord& rec) {
            const std::vector<long> ms{-2, -1, 1, 2};
            const Rat m4 = nb(ms[3]);
            Rat v3 = d.vandermonde({ms[0], ms[1], ms[2]}, 0);
            Rat s1 = 0;
            for (size_t j = 0; j < 4; ++j)
              for (size_t k = j + 1; k < 4; ++k) s1 += nb(ms[j]) * nb(ms[k]);
            Rat head = nb(ms[0]) + nb(ms[1]) + nb(ms[2]);
            Rat inner = s1 + (Rat(4) - m4) * head + Rat(6) * m4 - Rat(3) * m4 * m4 + Rat(4);
            auto rhs = op_add(op_scale(cw(3, 0), Rat(-10) * m4 * v3),
                              op_scale(cw(1, 0), Rat(1, 2) * m4 * v3 * inner));
            expect_op_equal(rec, bracket(ms, {3, 3, 3, 1}), rhs, -w, w);
          });
  guarded(sink, json{{"line", "w3w3w1w1"}, {"modes", "(-2,-1,1,2)"}},
          [&](CheckRecord& rec) {
            const std::vector<long> ms{-2, -1, 1, 2};
            Rat c = Rat(2) * nb(ms[2]) * nb(ms[3]) * (nb(ms[0]) - nb(ms[1])) *
                    (nb(ms[2]) - nb(ms[3]));
            expect_op_equal(rec, bracket(ms, {3, 3, 1, 1}), op_scale(cw(1, 0), c),
                            -w, w);
          });
  guarded(sink, json{{"line", "w3w1w1w1"}, {"modes", "(-2,0,1,2)"}},
          [&](CheckRecord& rec) {
            expect_op_zero(rec, bracket({-2, 0, 1, 2}, {3, 1, 1, 1}),
                           "four-fold bracket");
          });
  guarded(sink, json{{"line", "w1x4"}, {"modes", "(0,1,2,3)"}},
          [&](CheckRecord& rec) {
            expect_op_zero(rec, bracket({0, 1, 2, 3}, {1, 1, 1, 1}),
                           "four-fold bracket");
          });
}

void multibracket_ws(const CheckContext& ctx, const Sink& sink) {
  const auto& d = *ctx.d;
  const long w = ctx.window;
  for (long s : {1L, 2L, 3L}) {
    if (s > ctx.max_rank || 2 * s - 1 > ctx.arity_cap) continue;
    std::vector<long> modes;
    for (long m = -(s - 1); m <= s - 1; ++m) modes.push_back(m);
    guarded(sink, json{{"s", s}, {"modes", modes_str(modes)}},
            [&](CheckRecord& rec) {
              std::vector<GradedOperator> ops;
              for (long m : modes) ops.push_back(make_calW(d, w, s, m));
              auto lhs = n_bracket(ops);
              Rat c = multibracket_constant(d, s) * d.vandermonde(modes, 0);
              auto rhs = op_scale(make_calW(d, w, 1, 0), c);
              expect_op_equal(rec, lhs, rhs, -w, w);
              rec.note = "zero total mode; ratio powers collapse to 1";
            });
  }
}

void calw_2s_vanishing(const CheckContext& ctx, const Sink& sink) {
  const auto& d = *ctx.d;
  const long w = ctx.window;
  for (long s : {1L, 2L, 3L}) {
    if (s > ctx.max_rank || 2 * s > ctx.arity_cap) continue;
    std::vector<long> modes;
    for (long m = 1 - s; m <= s; ++m) modes.push_back(m);
    guarded(sink, json{{"s", s}, {"modes", modes_str(modes)}},
            [&](CheckRecord& rec) {
              std::vector<GradedOperator> ops;
              for (long m : modes) ops.push_back(make_calW(d, w, s, m));
              expect_op_zero(rec, n_bracket(ops),
                             std::to_string(2 * s) + "-fold bracket");
            });
  }
}

void nary_structure_leading(const CheckContext& ctx, const Sink& sink) {
  const auto& d = *ctx.d;
  const long w = ctx.window;
  struct Sample {
    std::vector<long> ranks, modes;
    long lead_rank;
    std::function<Rat()> claim;
  };
  auto nb = [&](long x) { return d.number(x); };
  std::vector<Sample> samples;
  samples.push_back({{3, 3}, {1, 2}, 4, [&] { return nb(2) - nb(4); }});
  samples.push_back({{2, 3}, {0, 1}, 3, [&] { return nb(0) - nb(1); }});
  samples.push_back({{2, 3, 2}, {1, 0, 2}, 4, [&] {
                       return nb(1 * (2 - 3) + 0 * (2 - 2) + 2 * (3 - 2));
                     }});
  samples.push_back({{2, 2, 2}, {0, 1, 2}, 3, [&] { return nb(0); }});
  samples.push_back({{3, 2, 2, 3}, {-2, -1, 1, 2}, 3, [&] {
                       return structure_f4(d, {-2, -1, 1, 2}, {3, 2, 2, 3});
                     }});
  samples.push_back({{2, 2, 2, 2, 2}, {-1, 0, 1, 2, 3}, 2, [&] {
                       return structure_g5(d, {-1, 0, 1, 2, 3}, {2, 2, 2, 2, 2});
                     }});

  for (const auto& smp : samples) {
    const long arity = static_cast<long>(smp.ranks.size());
    if (arity > ctx.arity_cap) continue;
    if (*std::max_element(smp.ranks.begin(), smp.ranks.end()) > ctx.max_rank)
      continue;
    guarded(sink,
            json{{"arity", arity},
                 {"ranks", modes_str(smp.ranks)},
                 {"modes", modes_str(smp.modes)},
                 {"leading-rank", smp.lead_rank}},
            [&](CheckRecord& rec) {
              long total = 0;
              std::vector<GradedOperator> ops;
              for (size_t i = 0; i < smp.modes.size(); ++i) {
                ops.push_back(make_calW(d, w, smp.ranks[i], smp.modes[i]));
                total += smp.modes[i];
              }
              auto X = n_bracket(ops);
              const long beta_top = total + smp.lead_rank - 1;
              auto sol = ladder_solve(d, X, -total, beta_top);
              if (!sol) {
                auto deeper = ladder_solve(d, X, -total, beta_top + 3);
                if (deeper) {
                  for (auto it = deeper->rbegin(); it != deeper->rend(); ++it)
                    if (it->first > beta_top && it->second != 0) {
                      set_fail(rec, "component above the claimed leading rank: "
                                    "beta " + std::to_string(it->first) +
                                    " coefficient " + rat_to_string(it->second));
                      return;
                    }
                  set_fail(rec, "decomposition exists only above the claimed bound");
                } else {
                  set_fail(rec, "bracket leaves the ladder span near the claimed rank");
                }
                return;
              }
              Rat got = 0;
              if (auto it = sol->find(beta_top); it != sol->end()) got = it->second;
              Rat want = (smp.lead_rank % 2 ? Rat(-1) : Rat(1)) * smp.claim();
              expect_rat_equal(rec, got, want, "top ladder coefficient");
            });
  }
}

void bremner(const CheckContext& ctx, const Sink& sink) {
  const auto& d = *ctx.d;
  const long w = std::min(ctx.window, 8L);
  if (ctx.max_rank < 2) {
    CheckRecord rec;
    rec.params = json{{"part", "operands"}};
    rec.status = "skipped";
    rec.note = "rank-2 generators lie outside the configured rank cap";
    sink(rec);
    return;
  }
  auto cw = [&](long s, long m) { return make_calW(d, w, s, m); };

  struct Alternants {
    GradedOperator product_lhs, slot_lhs, rhs;
  };
  // Literal sign-weighted sums over all 6! orderings of the B operands.
  // Inner triple brackets and [A, B_i, B_j] are memoized by sorted key.
  // product_lhs reads the juxtaposed inner factor as an operator product
  // followed by a plain commutator; slot_lhs reads it as the middle slot
  // of a ternary bracket.
  auto alternants = [](const GradedOperator& A,
                       const std::vector<GradedOperator>& B) {
    std::map<std::array<int, 3>, GradedOperator> tb3;
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b)
        for (int c = b + 1; c < 6; ++c)
          tb3.emplace(std::array<int, 3>{a, b, c},
                      n_bracket({B[a], B[b], B[c]}));
    std::map<std::array<int, 2>, GradedOperator> ab2;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        ab2.emplace(std::array<int, 2>{i, j}, n_bracket({A, B[i], B[j]}));
    auto tb = [&](int a, int b, int c) {
      std::array<int, 3> k{a, b, c};
      std::sort(k.begin(), k.end());
      auto v = tb3.at(k);
      return perm_sign({a, b, c}) < 0 ? op_scale(v, Rat(-1)) : v;
    };
    auto ab = [&](int i, int j) {
      auto v = ab2.at({std::min(i, j), std::max(i, j)});
      return i > j ? op_scale(v, Rat(-1)) : v;
    };
    Alternants out;
    bool init = false;
    std::vector<int> p{0, 1, 2, 3, 4, 5};
    do {
      Rat sg(perm_sign(p));
      auto t3 = tb(p[0], p[1], p[2]);
      auto t_prod = n_bracket(
          {op_commutator(op_compose(A, t3), B[p[3]]), B[p[4]], B[p[5]]});
      auto t_slot =
          n_bracket({n_bracket({A, t3, B[p[3]]}), B[p[4]], B[p[5]]});
      auto t_rhs =
          n_bracket({ab(p[0], p[1]), tb(p[2], p[3], p[4]), B[p[5]]});
      if (!init) {
        out.product_lhs = op_scale(t_prod, sg);
        out.slot_lhs = op_scale(t_slot, sg);
        out.rhs = op_scale(t_rhs, sg);
        init = true;
      } else {
        out.product_lhs = op_add(out.product_lhs, op_scale(t_prod, sg));
        out.slot_lhs = op_add(out.slot_lhs, op_scale(t_slot, sg));
        out.rhs = op_add(out.rhs, op_scale(t_rhs, sg));
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  };

  struct OperandSet {
    GradedOperator A;
    std::vector<GradedOperator> B;
  };
  std::vector<OperandSet> sets;
  sets.push_back({cw(2, 0),
                  {cw(2, -1), cw(2, 1), cw(2, 2), cw(1, 0), cw(1, 1),
                   cw(1, 2)}});
  sets.push_back({cw(1, 1),
                  {cw(2, -1), cw(2, 0), cw(2, 1), cw(2, 2), cw(1, 0),
                   cw(1, 2)}});
  for (size_t k = 0; k < sets.size(); ++k) {
    std::optional<Alternants> alt;
    auto ensure = [&]() -> const Alternants& {
      if (!alt) alt = alternants(sets[k].A, sets[k].B);
      return *alt;
    };
    guarded(sink,
            json{{"reading", "juxtaposition-as-product"}, {"tuple", int(k)}},
            [&](CheckRecord& rec) {
              rec.note = "inner factor read as composition then commutator";
              expect_op_zero(rec, op_sub(ensure().product_lhs, ensure().rhs),
                             "alternation difference");
            });
    guarded(sink,
            json{{"reading", "middle-bracket-slot"}, {"tuple", int(k)}},
            [&](CheckRecord& rec) {
              rec.note = "inner factor read as the middle ternary slot; the "
                         "relation then holds for arbitrary operators";
              expect_op_zero(rec, op_sub(ensure().slot_lhs, ensure().rhs),
                             "alternation difference");
            });
  }
  guarded(sink, json{{"part", "repeated-operands"}}, [&](CheckRecord& rec) {
    std::vector<GradedOperator> B(6, cw(2, 1));
    auto alt = alternants(cw(2, 1), B);
    expect_op_zero(rec, alt.product_lhs, "product-reading alternant");
    expect_op_zero(rec, alt.slot_lhs, "bracket-slot alternant");
    expect_op_zero(rec, alt.rhs, "right alternant");
  });
}

void filippov_probe(const CheckContext& ctx, const Sink& sink) {
  const auto& d = *ctx.d;
  const long w = ctx.window;
  guarded(sink, json{{"identity", "fundamental"}}, [&](CheckRecord& rec) {
    auto residual = [&](const std::array<GradedOperator, 5>& o) {
      auto lhs = n_bracket({o[0], o[1], n_bracket({o[2], o[3], o[4]})});
      auto r1 = n_bracket({n_bracket({o[0], o[1], o[2]}), o[3], o[4]});
      auto r2 = n_bracket({o[2], n_bracket({o[0], o[1], o[3]}), o[4]});
      auto r3 = n_bracket({o[2], o[3], n_bracket({o[0], o[1], o[4]})});
      return op_sub(lhs, op_add(op_add(r1, r2), r3));
    };
    auto cw = [&](long s, long m) { return make_calW(d, w, s, m); };
    std::vector<std::array<GradedOperator, 5>> quintuples{
        {cw(2, 1), cw(2, -1), cw(1, 1), cw(2, 0), cw(1, 2)},
        {cw(2, 0), cw(1, 1), cw(2, 2), cw(2, -1), cw(1, 3)}};
    for (size_t i = 0; i < quintuples.size(); ++i) {
      auto res = residual(quintuples[i]);
      if (!op_is_zero(res)) {
        const auto& [mode, row] = *res.act.begin();
        const auto& [target, c] = *row.begin();
        rec.note = "residual nonzero as expected on quintuple " +
                   std::to_string(i) + ", e.g. mode " + std::to_string(mode) +
                   " -> " + std::to_string(target) + ": " + rat_to_string(c);
        return;
      }
    }
    auto rng = check_rng("filippov-probe", ctx.seed);
    for (int rep = 0; rep < 5; ++rep) {
      std::array<GradedOperator, 5> o{
          random_banded(rng, -w, w, 1), random_banded(rng, -w, w, 1),
          random_banded(rng, -w, w, 1), random_banded(rng, -w, w, 1),
          random_banded(rng, -w, w, 1)};
      if (!op_is_zero(residual(o))) {
        rec.note = "residual nonzero on random operands, attempt " +
                   std::to_string(rep);
        return;
      }
    }
    set_fail(rec, "no nonzero fundamental-identity residual found on any probe");
  });
}

} // namespace rpq::checks
