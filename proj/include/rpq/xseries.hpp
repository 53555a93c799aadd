#pragma once

#include <map>

#include "rpq/tseries.hpp"

namespace rpq {

// Polynomial in one auxiliary variable x with TSeries coefficients,
// bigraded: x-degree in [0, xcap], time weight <= wcap. Exact under the
// double cap; degrees escaping either cap are dropped by definition.
struct XSeries {
  long xcap = 0, wcap = 0;
  std::map<long, TSeries> c; // x-degree -> coefficient; zero series erased
};

XSeries xs_zero(long xcap, long wcap);
XSeries xs_const(long xcap, long wcap, const Rat& v);
void xs_insert(XSeries& s, long deg, const TSeries& v);
XSeries xs_add(const XSeries& a, const XSeries& b);
XSeries xs_scale(const XSeries& a, const Rat& v);
XSeries xs_mul(const XSeries& a, const XSeries& b);
TSeries xs_coeff(const XSeries& a, long deg);
bool xs_is_zero(const XSeries& a);

// exp(a) for arguments with no degree-0 part (NonzeroConstantTerm).
XSeries xs_exp(const XSeries& a);

// sign * sum_{s=1}^{kmax} t_s x^s / s! — the generating-function argument.
XSeries xs_gen_arg(long xcap, long wcap, long kmax, const Rat& sign);

} // namespace rpq
