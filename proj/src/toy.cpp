#include "rpq/toy.hpp"

#include "rpq/errors.hpp"
#include "rpq/xseries.hpp"

namespace rpq {

Rat falling_scaled(const Deformation& d, long a, long n, long k) {
  if (k < 0) fail(Err::NegativeArgument, "falling length must be >= 0");
  Rat out(1);
  for (long j = 0; j < k; ++j) {
    out *= d.number_scaled(a, n - j);
    if (out == 0) break;
  }
  return out;
}

TOperator toy_time_route(const Deformation& d, long a, long gamma, long m,
                         long r, long kcap, long wcap, long* dropped) {
  if (r < 1 || a < 1 || gamma < 0 || m < 0)
    fail(Err::ConfigInvalid, "need r, a >= 1 and m, gamma >= 0");
  const Rat p = d.p(), q = d.q();
  const long M = m + r + gamma - 1;
  auto bells = bell_coefficients(wcap);
  TOperator out = top_zero(wcap);
  for (long i = 0; i + 1 <= r - 1; ++i) {
    const long e = r - 1 - i; // >= 1 here
    Rat base = d.binomial(r - 1, i) * falling_scaled(d, a, M, i) * pow_rat(q, a * e * M);
    if (base == 0) continue;
    for (long k = 1; k * e <= wcap; ++k) {
      TSeries bl = ts_drop_above(bells[k * e], k);
      Rat scalar = base * pow_rat(p, a * i * k) *
                   (factorial_int(m + k * e) / factorial_int(k)) * falling_scaled(d, a, k, e);
      if (scalar == 0 || ts_is_zero(bl)) continue;
      const long idx = m + k * e;
      if (idx > kcap) {
        if (dropped) ++*dropped;
        continue;
      }
      TOperator term{wcap, {}};
      term.terms[DMulti{{idx, 1}}] = ts_scale(bl, scalar);
      out = top_add(out, term);
    }
  }
  // degenerate branch: only the weight-0 Bell coefficient survives
  Rat tail = falling_scaled(d, a, M, r - 1) * factorial_int(m);
  if (tail != 0) {
    if (m > kcap) {
      if (dropped) ++*dropped;
    } else {
      TOperator term{wcap, {}};
      term.terms[DMulti{{m, 1}}] = ts_const(wcap, tail);
      out = top_add(out, term);
    }
  }
  return out;
}

namespace {

// x^n -> scale-a number(n) x^{n-1}, coefficient-wise.
XSeries xs_deriv_scaled(const Deformation& d, long a, const XSeries& f) {
  XSeries r{f.xcap, f.wcap, {}};
  for (const auto& [deg, coeff] : f.c) {
    if (deg == 0) continue; // scale-a number vanishes at 0
    Rat num = d.number_scaled(a, deg);
    if (num == 0) continue;
    xs_insert(r, deg - 1, ts_scale(coeff, num));
  }
  return r;
}

} // namespace

TOperator toy_x_route(const Deformation& d, long a, long gamma, long m,
                      long r, long kcap, long wcap) {
  if (r < 1 || a < 1 || gamma < 0 || m < 0)
    fail(Err::ConfigInvalid, "need r, a >= 1 and m, gamma >= 0");
  const long M = m + r + gamma - 1;
  const long xcap = M + wcap;
  XSeries e = xs_exp(xs_gen_arg(xcap, wcap, kcap, Rat(1)));
  XSeries einv = xs_exp(xs_gen_arg(xcap, wcap, kcap, Rat(-1)));

  XSeries mono = xs_zero(xcap, wcap);
  xs_insert(mono, M, ts_const(wcap, Rat(1)));
  XSeries q = xs_mul(mono, e);
  for (long i = 0; i < r - 1; ++i) q = xs_deriv_scaled(d, a, q);
  q = xs_scale(q, Rat(-1)); // generator sign
  XSeries g = xs_mul(q, einv);

  const long jmax = std::min(kcap, m + wcap);
  TOperator out{wcap, {}};
  for (const auto& [deg, coeff] : g.c) {
    const long j = deg - gamma;
    if (j < 0 || j > jmax) continue;
    TOperator term{wcap, {}};
    term.terms[DMulti{{j, 1}}] = ts_scale(coeff, factorial_int(j));
    out = top_add(out, term);
  }
  return out;
}

} // namespace rpq
