#include "rpq/matrix_model.hpp"

#include "rpq/errors.hpp"

namespace rpq {

namespace {

// q^{ek} - p^{ek} rescaling of the times; e = 0 kills every positive index.
std::function<Rat(long)> branch_scale(const Deformation& d, long e) {
  return [p = d.p(), q = d.q(), e](long k) -> Rat {
    return pow_rat(q, e * k) - pow_rat(p, e * k);
  };
}

TOperator dt_term(long wcap, long idx, const Rat& scalar) {
  TOperator t{wcap, {}};
  if (scalar != 0) t.terms[DMulti{{idx, 1}}] = ts_const(wcap, scalar);
  return t;
}

} // namespace

TOperator make_wtilde(const Deformation& d, int N, long m, long r,
                      long kcap, long wcap, long* dropped) {
  if (r < 1 || N < 1) fail(Err::IndexOrder, "rank and variable count must be >= 1");
  if (!d.is_builtin())
    fail(Err::IndeterminateAtZero, "eigenvalue factor has no custom-family value");
  const Rat p = d.p(), q = d.q();
  auto bells = bell_coefficients(wcap);
  // printed prefactor, low-rank-consistent sign and first eigenvalue power
  Rat pref = pow_rat(Rat(1) / (q - p), r - 1) * pow_rat(p, m + r - 1);
  if ((r - 1) % 2 == 1) pref = -pref;

  TOperator out = top_zero(wcap);
  for (long j = 0; j <= r - 1; ++j) {
    const long e = r - 1 - j;
    // exponent of (q/p); the product e * (3r - 3j - 4) is always even
    const long abar = e * m - e * e * N + e * (3 * r - 3 * j - 4) / 2;
    Rat base = d.binomial(r - 1, j) * pow_rat(q / p, abar);
    if (j % 2 == 1) base = -base;
    TOperator det = det_operator(2 * e, N, wcap);
    for (long l = 0; l <= wcap; ++l) {
      TSeries bl = ts_rescale(bells[l], branch_scale(d, e));
      if (ts_is_zero(bl)) continue;
      const long idx = l + m - 2 * e * N;
      if (idx < 0 || idx > kcap) {
        if (dropped) ++*dropped;
        continue;
      }
      Rat scalar = base * factorial_int(idx) / factorial_int(l);
      TOperator term = top_mul(det, dt_term(wcap, idx, Rat(1)));
      out = top_add(out, top_scale_series(term, ts_scale(bl, scalar)));
    }
  }
  return top_scale(out, pref);
}

TOperator make_wtilde_lowrank(const Deformation& d, int N, long m, long r,
                              long kcap, long wcap, long* dropped) {
  if (r < 2 || r > 4) fail(Err::IndexOrder, "printed expansions cover ranks 2..4 only");
  if (!d.is_builtin())
    fail(Err::IndeterminateAtZero, "eigenvalue factor has no custom-family value");
  const Rat p = d.p(), q = d.q();
  auto bells = bell_coefficients(wcap);

  // one printed branch: (q/p)^{expo} sum_k ((k+m-2eN)!/k!) B_k(t^e) D^{2e} d/dt
  auto branch = [&](long e, long expo) -> TOperator {
    TOperator sum = top_zero(wcap);
    TOperator det = det_operator(2 * e, N, wcap);
    for (long k = 0; k <= wcap; ++k) {
      TSeries bk = ts_rescale(bells[k], branch_scale(d, e));
      if (ts_is_zero(bk)) continue;
      const long idx = k + m - 2 * e * N;
      if (idx < 0 || idx > kcap) {
        if (dropped) ++*dropped;
        continue;
      }
      Rat scalar = factorial_int(idx) / factorial_int(k);
      TOperator term = top_mul(det, dt_term(wcap, idx, Rat(1)));
      sum = top_add(sum, top_scale_series(term, ts_scale(bk, scalar)));
    }
    return top_scale(sum, pow_rat(q / p, expo));
  };
  TOperator last = dt_term(wcap, m, factorial_int(m));
  if (m > kcap) {
    last = top_zero(wcap);
    if (dropped) ++*dropped;
  }

  TOperator inner = top_zero(wcap);
  Rat pref;
  if (r == 2) {
    inner = top_sub(branch(1, m - N + 1), last);
    pref = -pow_rat(Rat(1) / (q - p), 1) * pow_rat(p, m + 1);
  } else if (r == 3) {
    inner = top_add(top_sub(branch(2, 2 * m - 4 * N + 5),
                            top_scale(branch(1, m + 1 - N), d.number(2))),
                    last);
    pref = pow_rat(Rat(1) / (q - p), 2) * pow_rat(p, m + 2);
  } else {
    inner = top_sub(top_add(top_sub(branch(3, 3 * m - 9 * N + 12),
                                    top_scale(branch(2, 2 * m - 4 * N + 5), d.number(3))),
                            top_scale(branch(1, m + 1 - N), d.number(3))),
                    last);
    pref = -pow_rat(Rat(1) / (q - p), 3) * pow_rat(p, m + 3);
  }
  return top_scale(inner, pref);
}

Rat theta_F(const Deformation& d, const Rat& y) {
  Rat r10 = d.R_at(Rat(1), Rat(0));
  if (r10 == 0) return y;
  if (y == r10) fail(Err::PoleHit, "theta factor argument hits the kernel pole");
  return y / (y - r10);
}

Rat theta_G(const Deformation& d, long P, long Q) {
  const Rat p = d.p(), q = d.q();
  Rat r10 = d.R_at(Rat(1), Rat(0));
  if (r10 == 0) {
    Rat denom = pow_rat(q, Q) * d.R_at(pow_rat(p, P), pow_rat(q, Q));
    if (denom == 0) fail(Err::PoleHit, "theta weight denominator vanishes");
    return (pow_rat(q, Q) - pow_rat(p, P)) / denom;
  }
  Rat rPQ = d.R_at(p * P, q * Q);
  Rat denom = q * Q * rPQ;
  if (denom == 0) fail(Err::PoleHit, "theta weight denominator vanishes");
  return (p * (Q - P) * rPQ + (p * P - q * Q) * r10) / denom;
}

Rat theta_eval(const Deformation& d, const Rat& x, long factors, long P, long Q) {
  if (x == 0) fail(Err::PoleHit, "theta argument must be invertible");
  const Rat ratio = d.q() / d.p();
  const Rat g = theta_G(d, P, Q);
  Rat out(1);
  for (long k = 0; k < factors; ++k) {
    out *= Rat(1) - theta_F(d, pow_rat(ratio, k) * x) * g;
    out *= Rat(1) - theta_F(d, pow_rat(ratio, k + 1) / x) * g;
  }
  return out;
}

} // namespace rpq
