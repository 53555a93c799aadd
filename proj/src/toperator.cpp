#include "rpq/toperator.hpp"

#include <algorithm>
#include <sstream>

#include "rpq/errors.hpp"
#include "rpq/xseries.hpp"

namespace rpq {

TOperator top_zero(long wcap) { return TOperator{wcap, {}}; }

TOperator top_identity(long wcap) {
  TOperator t{wcap, {}};
  t.terms[DMulti{}] = ts_const(wcap, Rat(1));
  return t;
}

void top_add_term(TOperator& a, const DMulti& d, const TSeries& coeff) {
  if (coeff.wcap != a.wcap) fail(Err::WindowMismatch, "weight caps differ");
  if (ts_is_zero(coeff)) return;
  auto it = a.terms.find(d);
  if (it == a.terms.end()) {
    a.terms[d] = coeff;
  } else {
    it->second = ts_add(it->second, coeff);
    if (ts_is_zero(it->second)) a.terms.erase(it);
  }
}

TOperator top_add(const TOperator& a, const TOperator& b) {
  if (a.wcap != b.wcap) fail(Err::WindowMismatch, "weight caps differ");
  TOperator r = a;
  for (const auto& [d, c] : b.terms) top_add_term(r, d, c);
  return r;
}

TOperator top_sub(const TOperator& a, const TOperator& b) {
  return top_add(a, top_scale(b, Rat(-1)));
}

TOperator top_scale(const TOperator& a, const Rat& v) {
  TOperator r{a.wcap, {}};
  if (v == 0) return r;
  for (const auto& [d, c] : a.terms) r.terms[d] = ts_scale(c, v);
  return r;
}

TOperator top_scale_series(const TOperator& a, const TSeries& s) {
  TOperator r{a.wcap, {}};
  for (const auto& [d, c] : a.terms) {
    TSeries sc = ts_mul(s, c);
    if (!ts_is_zero(sc)) r.terms[d] = sc;
  }
  return r;
}

bool top_is_zero(const TOperator& a) { return a.terms.empty(); }

bool top_equal(const TOperator& a, const TOperator& b) {
  if (a.wcap != b.wcap) fail(Err::WindowMismatch, "weight caps differ");
  if (a.terms.size() != b.terms.size()) return false;
  auto ib = b.terms.begin();
  for (const auto& [d, c] : a.terms) {
    if (d != ib->first || !ts_equal(c, ib->second)) return false;
    ++ib;
  }
  return true;
}

std::optional<TopMismatch> top_diff_witness(const TOperator& a, const TOperator& b) {
  auto ia = a.terms.begin();
  auto ib = b.terms.begin();
  auto scan = [](const DMulti& d, const TSeries& x, const TSeries& y)
      -> std::optional<TopMismatch> {
    auto mx = x.c.begin();
    auto my = y.c.begin();
    while (mx != x.c.end() || my != y.c.end()) {
      if (my == y.c.end() || (mx != x.c.end() && mx->first < my->first)) {
        return TopMismatch{d, mx->first, mx->second, Rat(0)};
      }
      if (mx == x.c.end() || my->first < mx->first) {
        return TopMismatch{d, my->first, Rat(0), my->second};
      }
      if (mx->second != my->second) return TopMismatch{d, mx->first, mx->second, my->second};
      ++mx, ++my;
    }
    return std::nullopt;
  };
  TSeries zero = ts_zero(a.wcap);
  while (ia != a.terms.end() || ib != b.terms.end()) {
    if (ib == b.terms.end() || (ia != a.terms.end() && ia->first < ib->first)) {
      if (auto w = scan(ia->first, ia->second, zero)) return w;
      ++ia;
    } else if (ia == a.terms.end() || ib->first < ia->first) {
      if (auto w = scan(ib->first, zero, ib->second)) return w;
      ++ib;
    } else {
      if (auto w = scan(ia->first, ia->second, ib->second)) return w;
      ++ia, ++ib;
    }
  }
  return std::nullopt;
}

TOperator top_mul(const TOperator& a, const TOperator& b) {
  if (a.wcap != b.wcap) fail(Err::WindowMismatch, "weight caps differ");
  TOperator r{a.wcap, {}};
  for (const auto& [db, cb] : b.terms) {
    if (!ts_is_constant(cb))
      fail(Err::ConfigInvalid, "composition needs a constant-coefficient right factor");
    Rat vb = ts_const_part(cb);
    for (const auto& [da, ca] : a.terms) {
      DMulti d = da;
      for (const auto& [k, e] : db) d[k] += e;
      top_add_term(r, d, ts_scale(ca, vb));
    }
  }
  return r;
}

bool top_proportional(const TOperator& a, const TOperator& b, Rat& scalar,
                      std::string& witness) {
  if (top_is_zero(a) && top_is_zero(b)) {
    scalar = 1;
    return true;
  }
  if (top_is_zero(b)) {
    witness = "right side vanishes while left does not";
    return false;
  }
  if (top_is_zero(a)) {
    scalar = 0;
    return true;
  }
  const auto& [d0, c0] = *b.terms.begin();
  auto ia = a.terms.find(d0);
  if (ia == a.terms.end()) {
    witness = "left side lacks " + dmulti_to_string(d0);
    return false;
  }
  const auto& [m0, v0] = *c0.c.begin();
  Rat va = ts_coeff(ia->second, m0);
  if (va == 0) {
    witness = "left coefficient vanishes at " + dmulti_to_string(d0);
    return false;
  }
  scalar = va / v0;
  if (auto w = top_diff_witness(a, top_scale(b, scalar))) {
    std::ostringstream os;
    os << "ratio breaks at " << dmulti_to_string(w->d) << ": " << rat_to_string(w->lhs)
       << " vs scaled " << rat_to_string(w->rhs);
    witness = os.str();
    return false;
  }
  return true;
}

std::string dmulti_to_string(const DMulti& d) {
  if (d.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, e] : d) {
    if (!first) os << "*";
    first = false;
    os << "d[t" << k << "]";
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

std::vector<TSeries> bell_coefficients(long kmax) {
  XSeries e = xs_exp(xs_gen_arg(kmax, kmax, kmax, Rat(1)));
  std::vector<TSeries> out;
  Rat fact(1);
  for (long k = 0; k <= kmax; ++k) {
    if (k > 0) fact *= k;
    out.push_back(ts_scale(xs_coeff(e, k), fact));
  }
  return out;
}

std::vector<TSeries> bell_recursion(long kmax) {
  std::vector<TSeries> b{ts_const(kmax, Rat(1))};
  for (long n = 0; n < kmax; ++n) {
    TSeries next = ts_zero(kmax);
    for (long i = 0; i <= n; ++i) {
      TSeries term = ts_mul(ts_time(kmax, i + 1), b[n - i]);
      next = ts_add(next, ts_scale(term, binom_int(n, i)));
    }
    b.push_back(next);
  }
  return b;
}

TOperator det_operator(long m, int N, long wcap) {
  if (m < 0 || N < 0) fail(Err::NegativeArgument, "determinant operator needs m, N >= 0");
  if (m == 0 || N == 0) return top_identity(wcap);
  // entry(i, j), 1-based: (m(i-j+1))! d/dt_{m(i-j+1)} for j <= i, the
  // integer i for j = i+1, zero otherwise.
  auto entry = [&](int i, int j) -> std::optional<TOperator> {
    if (j <= i) {
      long idx = m * (i - j + 1);
      TOperator t{wcap, {}};
      t.terms[DMulti{{idx, 1}}] = ts_const(wcap, factorial_int(idx));
      return t;
    }
    if (j == i + 1) {
      TOperator t = top_identity(wcap);
      return top_scale(t, Rat(i));
    }
    return std::nullopt;
  };
  std::vector<int> perm(N);
  for (int i = 0; i < N; ++i) perm[i] = i;
  TOperator sum = top_zero(wcap);
  Rat nfact = factorial_int(N);
  do {
    int sign = 1;
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    TOperator prod = top_identity(wcap);
    bool zero = false;
    for (int i = 1; i <= N; ++i) {
      auto e = entry(i, perm[i - 1] + 1);
      if (!e) { zero = true; break; }
      prod = top_mul(prod, *e);
    }
    if (!zero) sum = top_add(sum, top_scale(prod, Rat(sign)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return top_scale(sum, Rat(1) / nfact);
}

TOperator multi_index_operator(const std::vector<long>& modes, long wcap) {
  const int N = static_cast<int>(modes.size());
  if (N == 0) return top_identity(wcap);
  for (long m : modes)
    if (m < 1) fail(Err::ConfigInvalid, "multi-index entries must be positive");
  TOperator sum = top_zero(wcap);
  // position subsets S of size k; the removed values drive one derivative.
  for (int mask = 1; mask < (1 << N); ++mask) {
    int k = __builtin_popcount(static_cast<unsigned>(mask));
    long s = 0;
    std::vector<long> rest;
    for (int i = 0; i < N; ++i) {
      if (mask & (1 << i)) s += modes[i];
      else rest.push_back(modes[i]);
    }
    TOperator dt{wcap, {}};
    dt.terms[DMulti{{s, 1}}] = ts_const(wcap, factorial_int(s));
    TOperator term = top_mul(dt, multi_index_operator(rest, wcap));
    Rat coef = factorial_int(k) * Rat((k % 2 == 1) ? 1 : -1);
    sum = top_add(sum, top_scale(term, coef));
  }
  return top_scale(sum, make_rat(1, N));
}

TSeries top_apply_exp(const TOperator& T, const std::vector<Rat>& xs) {
  // power sums p_k / k! on demand
  // explicit return type: gmpxx expression templates must not escape
  auto pk_over_fact = [&](long k) -> Rat {
    Rat p(0);
    for (const Rat& x : xs) p += pow_rat(x, k);
    return p / factorial_int(k);
  };
  TSeries out = ts_zero(T.wcap);
  for (const auto& [d, coeff] : T.terms) {
    TSeries s = ts_const(T.wcap, Rat(1));
    for (const auto& [k, e] : d) {
      Rat pf = pk_over_fact(k);
      for (int i = 0; i < e; ++i) s = ts_add(ts_dt(s, k), ts_scale(s, pf));
    }
    out = ts_add(out, ts_mul(coeff, s));
  }
  return out;
}

} // namespace rpq
