#include "rpq/tseries.hpp"

#include <sstream>

#include "rpq/errors.hpp"

namespace rpq {

long tmono_weight(const TMono& m) {
  long w = 0;
  for (const auto& [k, e] : m) w += k * e;
  return w;
}

TSeries ts_zero(long wcap) { return TSeries{wcap, {}}; }

TSeries ts_const(long wcap, const Rat& v) {
  TSeries s{wcap, {}};
  if (v != 0) s.c[TMono{}] = v;
  return s;
}

TSeries ts_time(long wcap, long k) {
  if (k < 1) fail(Err::ConfigInvalid, "time index must be positive");
  TSeries s{wcap, {}};
  if (k <= wcap) s.c[TMono{{k, 1}}] = Rat(1);
  return s;
}

void ts_insert(TSeries& s, const TMono& m, const Rat& v) {
  if (tmono_weight(m) > s.wcap) return;
  Rat& slot = s.c[m];
  slot += v;
  if (slot == 0) s.c.erase(m);
}

static void require_same_cap(const TSeries& a, const TSeries& b) {
  if (a.wcap != b.wcap) fail(Err::WindowMismatch, "weight caps differ");
}

TSeries ts_add(const TSeries& a, const TSeries& b) {
  require_same_cap(a, b);
  TSeries r = a;
  for (const auto& [m, v] : b.c) ts_insert(r, m, v);
  return r;
}

TSeries ts_sub(const TSeries& a, const TSeries& b) {
  require_same_cap(a, b);
  TSeries r = a;
  for (const auto& [m, v] : b.c) ts_insert(r, m, -v);
  return r;
}

TSeries ts_scale(const TSeries& a, const Rat& v) {
  TSeries r{a.wcap, {}};
  if (v == 0) return r;
  for (const auto& [m, c] : a.c) r.c[m] = c * v;
  return r;
}

TSeries ts_mul(const TSeries& a, const TSeries& b) {
  require_same_cap(a, b);
  TSeries r{a.wcap, {}};
  for (const auto& [ma, va] : a.c) {
    long wa = tmono_weight(ma);
    for (const auto& [mb, vb] : b.c) {
      if (wa + tmono_weight(mb) > a.wcap) continue;
      TMono m = ma;
      for (const auto& [k, e] : mb) m[k] += e;
      ts_insert(r, m, va * vb);
    }
  }
  return r;
}

bool ts_is_zero(const TSeries& a) { return a.c.empty(); }

bool ts_equal(const TSeries& a, const TSeries& b) {
  require_same_cap(a, b);
  return a.c == b.c;
}

bool ts_is_constant(const TSeries& a) {
  return a.c.empty() || (a.c.size() == 1 && a.c.begin()->first.empty());
}

Rat ts_coeff(const TSeries& a, const TMono& m) {
  auto it = a.c.find(m);
  return it == a.c.end() ? Rat(0) : it->second;
}

Rat ts_const_part(const TSeries& a) { return ts_coeff(a, TMono{}); }

TSeries ts_exp(const TSeries& a) {
  if (ts_const_part(a) != 0) fail(Err::NonzeroConstantTerm, "exp needs vanishing constant term");
  TSeries r = ts_const(a.wcap, Rat(1));
  TSeries pw = ts_const(a.wcap, Rat(1));
  Rat fact(1);
  // a has minimal weight >= 1, so powers beyond wcap vanish.
  for (long j = 1; j <= a.wcap; ++j) {
    pw = ts_mul(pw, a);
    if (ts_is_zero(pw)) break;
    fact *= j;
    r = ts_add(r, ts_scale(pw, Rat(1) / fact));
  }
  return r;
}

TSeries ts_rescale(const TSeries& a, const std::function<Rat(long)>& scale) {
  TSeries r{a.wcap, {}};
  for (const auto& [m, v] : a.c) {
    Rat f = v;
    for (const auto& [k, e] : m) {
      Rat s = scale(k);
      for (int i = 0; i < e; ++i) f *= s;
      if (f == 0) break;
    }
    if (f != 0) ts_insert(r, m, f);
  }
  return r;
}

TSeries ts_drop_above(const TSeries& a, long kmax) {
  TSeries r{a.wcap, {}};
  for (const auto& [m, v] : a.c) {
    bool keep = true;
    for (const auto& [k, e] : m)
      if (k > kmax) { keep = false; break; }
    if (keep) r.c[m] = v;
  }
  return r;
}

TSeries ts_dt(const TSeries& a, long k) {
  TSeries r{a.wcap, {}};
  for (const auto& [m, v] : a.c) {
    auto it = m.find(k);
    if (it == m.end()) continue;
    TMono d = m;
    if (it->second == 1) d.erase(k); else --d[k];
    ts_insert(r, d, v * it->second);
  }
  return r;
}

std::string ts_to_string(const TSeries& a) {
  if (a.c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, v] : a.c) {
    if (!first) os << " + ";
    first = false;
    os << "(" << rat_to_string(v) << ")";
    for (const auto& [k, e] : m) {
      os << "*t" << k;
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

} // namespace rpq
