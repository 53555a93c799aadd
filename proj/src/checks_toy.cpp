#include <map>

#include "checks_util.hpp"
#include "rpq/toy.hpp"

namespace rpq::checks {

void toy_duality_t0(const CheckContext& ctx, const Sink& sink) {
  const auto& d = *ctx.d;
  const long cap = ctx.t_order;
  for (long a : ctx.toy_a)
    for (long gamma : ctx.toy_gamma)
      guarded(sink, json{{"a", a}, {"gamma", gamma}}, [&](CheckRecord& rec) {
        for (long r = 1; r <= 3; ++r)
          for (long m = 0; m <= 2; ++m) {
            auto xr = toy_x_route(d, a, gamma, m, r, cap, cap);
            long dropped = 0;
            auto tr = toy_time_route(d, a, gamma, m, r, cap, cap, &dropped);
            std::map<DMulti, Rat> xc, tc;
            for (const auto& [dm, s] : xr.terms) {
              Rat c = ts_const_part(s);
              if (c != 0) xc[dm] = c;
            }
            for (const auto& [dm, s] : tr.terms) {
              Rat c = ts_const_part(s);
              if (c != 0) tc[dm] = c;
            }
            auto all = xc;
            for (const auto& [dm, c] : tc) all.emplace(dm, Rat(0));
            for (const auto& [dm, unused] : all) {
              Rat xv = xc.count(dm) ? xc[dm] : Rat(0);
              Rat tv = tc.count(dm) ? tc[dm] : Rat(0);
              if (xv != -tv) {
                set_fail(rec, "(r,m)=(" + std::to_string(r) + "," +
                                  std::to_string(m) + ") derivative " +
                                  dmulti_to_string(dm) + ": expansion route " +
                                  rat_to_string(xv) + ", branch route " +
                                  rat_to_string(tv));
                return;
              }
            }
          }
      });
}

void toy_duality(const CheckContext& ctx, const Sink& sink) {
  const auto& d = *ctx.d;
  const long cap = ctx.t_order;
  for (long a : ctx.toy_a)
    for (long gamma : ctx.toy_gamma)
      for (long r = 1; r <= 3; ++r)
        for (long m = 0; m <= 2; ++m)
          guarded(sink, json{{"a", a}, {"gamma", gamma}, {"r", r}, {"m", m}},
                  [&](CheckRecord& rec) {
                    auto xr = toy_x_route(d, a, gamma, m, r, cap, cap);
                    long dropped = 0;
                    auto tr = toy_time_route(d, a, gamma, m, r, cap, cap, &dropped);
                    Rat scalar;
                    std::string witness;
                    if (!top_proportional(xr, tr, scalar, witness)) {
                      set_fail(rec, witness);
                      return;
                    }
                    if (scalar != Rat(-1)) {
                      set_fail(rec, "routes proportional with scalar " +
                                        rat_to_string(scalar) +
                                        ", displayed matching needs -1");
                      return;
                    }
                    if (dropped > 0)
                      rec.note = "derivative indices above the cap dropped: " +
                                 std::to_string(dropped);
                  });
}

} // namespace rpq::checks
