#include "rpq/xseries.hpp"

#include "rpq/errors.hpp"

namespace rpq {

XSeries xs_zero(long xcap, long wcap) { return XSeries{xcap, wcap, {}}; }

XSeries xs_const(long xcap, long wcap, const Rat& v) {
  XSeries s{xcap, wcap, {}};
  if (v != 0) s.c[0] = ts_const(wcap, v);
  return s;
}

void xs_insert(XSeries& s, long deg, const TSeries& v) {
  if (deg < 0 || deg > s.xcap || ts_is_zero(v)) return;
  auto it = s.c.find(deg);
  if (it == s.c.end()) {
    s.c[deg] = v;
  } else {
    it->second = ts_add(it->second, v);
    if (ts_is_zero(it->second)) s.c.erase(it);
  }
}

static void require_same_caps(const XSeries& a, const XSeries& b) {
  if (a.xcap != b.xcap || a.wcap != b.wcap) fail(Err::WindowMismatch, "series caps differ");
}

XSeries xs_add(const XSeries& a, const XSeries& b) {
  require_same_caps(a, b);
  XSeries r = a;
  for (const auto& [d, v] : b.c) xs_insert(r, d, v);
  return r;
}

XSeries xs_scale(const XSeries& a, const Rat& v) {
  XSeries r{a.xcap, a.wcap, {}};
  if (v == 0) return r;
  for (const auto& [d, s] : a.c) r.c[d] = ts_scale(s, v);
  return r;
}

XSeries xs_mul(const XSeries& a, const XSeries& b) {
  require_same_caps(a, b);
  XSeries r{a.xcap, a.wcap, {}};
  for (const auto& [da, va] : a.c)
    for (const auto& [db, vb] : b.c) {
      if (da + db > a.xcap) continue;
      xs_insert(r, da + db, ts_mul(va, vb));
    }
  return r;
}

TSeries xs_coeff(const XSeries& a, long deg) {
  auto it = a.c.find(deg);
  return it == a.c.end() ? ts_zero(a.wcap) : it->second;
}

bool xs_is_zero(const XSeries& a) { return a.c.empty(); }

XSeries xs_exp(const XSeries& a) {
  if (a.c.count(0)) fail(Err::NonzeroConstantTerm, "exp needs vanishing degree-0 part");
  XSeries r = xs_const(a.xcap, a.wcap, Rat(1));
  XSeries pw = r;
  Rat fact(1);
  for (long j = 1; j <= a.xcap; ++j) {
    pw = xs_mul(pw, a);
    if (xs_is_zero(pw)) break;
    fact *= j;
    r = xs_add(r, xs_scale(pw, Rat(1) / fact));
  }
  return r;
}

XSeries xs_gen_arg(long xcap, long wcap, long kmax, const Rat& sign) {
  XSeries r{xcap, wcap, {}};
  Rat fact(1);
  for (long s = 1; s <= kmax; ++s) {
    fact *= s;
    xs_insert(r, s, ts_scale(ts_time(wcap, s), sign / fact));
  }
  return r;
}

} // namespace rpq
