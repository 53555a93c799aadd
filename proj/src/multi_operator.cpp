#include "rpq/multi_operator.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "rpq/errors.hpp"
#include "rpq/graded_operator.hpp"

namespace rpq {

namespace {

void require_same_shape(const MultiOp& a, const MultiOp& b) {
  if (a.N != b.N) fail(Err::WindowMismatch, "coordinate counts differ");
}

long inf_norm(const ModeVec& v) {
  long m = 0;
  for (long x : v) m = std::max(m, std::labs(x));
  return m;
}

// visits every lattice point of [lo, hi]^N
template <typename F>
void for_each_mode(int N, long lo, long hi, F&& f) {
  if (lo > hi) return;
  ModeVec v(N, lo);
  while (true) {
    f(v);
    int j = 0;
    while (j < N && v[j] == hi) v[j++] = lo;
    if (j == N) return;
    ++v[j];
  }
}

} // namespace

MultiOp mop_zero(int N, long w) {
  if (N < 1 || w < 0) fail(Err::ConfigInvalid, "need N >= 1 and w >= 0");
  MultiOp g;
  g.N = N;
  g.lo = -w;
  g.hi = w;
  g.smin.assign(N, 0);
  g.smax.assign(N, 0);
  return g;
}

MultiOp mop_identity(int N, long w) {
  MultiOp g = mop_zero(N, w);
  for_each_mode(N, -w, w, [&](const ModeVec& v) { g.act[v][v] = Rat(1); });
  mop_finalize(g);
  return g;
}

void mop_insert(MultiOp& g, const ModeVec& mode, const ModeVec& target, const Rat& c) {
  if (static_cast<int>(mode.size()) != g.N || static_cast<int>(target.size()) != g.N)
    fail(Err::WindowMismatch, "mode arity differs from the operator");
  g.act[mode][target] += c;
}

void mop_finalize(MultiOp& g) {
  bool any = false;
  for (auto it = g.act.begin(); it != g.act.end();) {
    for (auto jt = it->second.begin(); jt != it->second.end();) {
      if (jt->second == 0) {
        jt = it->second.erase(jt);
        continue;
      }
      for (int c = 0; c < g.N; ++c) {
        long s = jt->first[c] - it->first[c];
        if (!any) {
          g.smin[c] = g.smax[c] = s;
        } else {
          g.smin[c] = std::min(g.smin[c], s);
          g.smax[c] = std::max(g.smax[c], s);
        }
      }
      any = true;
      ++jt;
    }
    it = it->second.empty() ? g.act.erase(it) : std::next(it);
  }
  if (!any) {
    g.smin.assign(g.N, 0);
    g.smax.assign(g.N, 0);
  }
}

MultiOp mop_add(const MultiOp& a, const MultiOp& b) {
  require_same_shape(a, b);
  MultiOp g;
  g.N = a.N;
  g.lo = std::max(a.lo, b.lo);
  g.hi = std::min(a.hi, b.hi);
  g.smin.assign(g.N, 0);
  g.smax.assign(g.N, 0);
  if (g.domain_empty()) fail(Err::WindowExhausted, "summands share no modes");
  auto pour = [&](const MultiOp& src) {
    for (const auto& [n, row] : src.act) {
      if (*std::min_element(n.begin(), n.end()) < g.lo ||
          *std::max_element(n.begin(), n.end()) > g.hi)
        continue;
      for (const auto& [t, c] : row) g.act[n][t] += c;
    }
  };
  pour(a);
  pour(b);
  mop_finalize(g);
  return g;
}

MultiOp mop_sub(const MultiOp& a, const MultiOp& b) {
  return mop_add(a, mop_scale(b, Rat(-1)));
}

MultiOp mop_scale(const MultiOp& a, const Rat& c) {
  MultiOp g = a;
  if (c == 0) {
    g.act.clear();
    g.smin.assign(g.N, 0);
    g.smax.assign(g.N, 0);
    return g;
  }
  for (auto& [n, row] : g.act)
    for (auto& [t, v] : row) v *= c;
  return g;
}

MultiOp mop_compose(const MultiOp& a, const MultiOp& b) {
  require_same_shape(a, b);
  // per coordinate: modes where every b target lands inside a's domain
  long lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
  for (int c = 0; c < a.N; ++c) {
    lo = std::max(lo, a.lo - b.smin[c]);
    hi = std::min(hi, a.hi - b.smax[c]);
  }
  if (lo > hi) fail(Err::WindowExhausted, "composition window is empty");
  MultiOp g;
  g.N = a.N;
  g.lo = lo;
  g.hi = hi;
  g.smin.assign(g.N, 0);
  g.smax.assign(g.N, 0);
  for (const auto& [n, row] : b.act) {
    if (*std::min_element(n.begin(), n.end()) < lo ||
        *std::max_element(n.begin(), n.end()) > hi)
      continue;
    for (const auto& [t1, c1] : row) {
      auto it = a.act.find(t1);
      if (it == a.act.end()) continue;
      for (const auto& [t2, c2] : it->second) g.act[n][t2] += c1 * c2;
    }
  }
  mop_finalize(g);
  return g;
}

MultiOp mop_commutator(const MultiOp& a, const MultiOp& b) {
  return mop_sub(mop_compose(a, b), mop_compose(b, a));
}

bool mop_is_zero(const MultiOp& a) { return a.act.empty(); }

std::optional<MopMismatch> mop_diff_witness(const MultiOp& a, const MultiOp& b) {
  require_same_shape(a, b);
  long lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
  if (lo > hi) fail(Err::WindowExhausted, "no shared modes to compare");
  std::vector<ModeVec> modes;
  for_each_mode(a.N, lo, hi, [&](const ModeVec& v) { modes.push_back(v); });
  std::stable_sort(modes.begin(), modes.end(),
                   [](const ModeVec& x, const ModeVec& y) {
                     return inf_norm(x) < inf_norm(y);
                   });
  static const std::map<ModeVec, Rat> kEmpty;
  for (const auto& n : modes) {
    auto ia = a.act.find(n);
    auto ib = b.act.find(n);
    const auto& ra = (ia == a.act.end()) ? kEmpty : ia->second;
    const auto& rb = (ib == b.act.end()) ? kEmpty : ib->second;
    std::map<ModeVec, Rat> keys;
    for (const auto& [t, c] : ra) keys[t] = 0;
    for (const auto& [t, c] : rb) keys[t] = 0;
    for (const auto& [t, unused] : keys) {
      auto va = ra.count(t) ? ra.at(t) : Rat(0);
      auto vb = rb.count(t) ? rb.at(t) : Rat(0);
      if (va != vb) return MopMismatch{n, t, va, vb};
    }
  }
  return std::nullopt;
}

MultiOp mop_n_bracket(const std::vector<MultiOp>& ops) {
  if (ops.empty()) fail(Err::ConfigInvalid, "need at least one operand");
  const int n = static_cast<int>(ops.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  MultiOp acc;
  bool first = true;
  do {
    MultiOp prod = ops[perm[0]];
    for (int i = 1; i < n; ++i) prod = mop_compose(prod, ops[perm[i]]);
    prod = mop_scale(prod, Rat(perm_sign(perm)));
    acc = first ? prod : mop_add(acc, prod);
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

bool mop_proportional(const MultiOp& a, const MultiOp& b, Rat& scalar,
                      std::string& witness) {
  require_same_shape(a, b);
  long lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
  if (lo > hi) fail(Err::WindowExhausted, "no shared modes to compare");
  Rat found(0);
  bool have = false;
  for (const auto& [n, row] : b.act) {
    if (*std::min_element(n.begin(), n.end()) < lo ||
        *std::max_element(n.begin(), n.end()) > hi)
      continue;
    for (const auto& [t, c] : row) {
      if (c == 0) continue;
      Rat av(0);
      auto ia = a.act.find(n);
      if (ia != a.act.end()) {
        auto ja = ia->second.find(t);
        if (ja != ia->second.end()) av = ja->second;
      }
      found = av / c;
      have = true;
      break;
    }
    if (have) break;
  }
  if (!have) {
    // compare a against zero on the shared box
    for (const auto& [n, row] : a.act) {
      if (*std::min_element(n.begin(), n.end()) < lo ||
          *std::max_element(n.begin(), n.end()) > hi)
        continue;
      for (const auto& [t, c] : row) {
        if (c != 0) {
          std::ostringstream os;
          os << "right side vanishes but left acts at mode (";
          for (size_t i = 0; i < n.size(); ++i) os << (i ? "," : "") << n[i];
          os << ")";
          witness = os.str();
          return false;
        }
      }
    }
    scalar = 1;
    return true;
  }
  scalar = found;
  if (auto wtn = mop_diff_witness(a, mop_scale(b, scalar))) {
    std::ostringstream os;
    os << "ratio breaks at mode (";
    for (size_t i = 0; i < wtn->mode.size(); ++i)
      os << (i ? "," : "") << wtn->mode[i];
    os << "): " << rat_to_string(wtn->lhs) << " vs scaled "
       << rat_to_string(wtn->rhs);
    witness = os.str();
    return false;
  }
  return true;
}

MultiOp mop_Dj(const Deformation& d, int N, long w, int j) {
  if (j < 0 || j >= N) fail(Err::ConfigInvalid, "coordinate out of range");
  MultiOp g = mop_zero(N, w);
  for_each_mode(N, -w, w, [&](const ModeVec& v) {
    ModeVec t = v;
    t[j] -= 1;
    mop_insert(g, v, t, d.number(v[j]));
  });
  mop_finalize(g);
  return g;
}

MultiOp make_Vbar(const Deformation& d, long w, const std::vector<long>& modes,
                  const std::vector<long>& ranks) {
  const int N = static_cast<int>(modes.size());
  if (ranks.size() != modes.size() || N < 1)
    fail(Err::ConfigInvalid, "need matching mode and rank lists");
  long rsum = 0;
  for (long r : ranks) {
    if (r < 1) fail(Err::IndexOrder, "rank must be >= 1");
    rsum += r;
  }
  const Rat sign((rsum % 2 == 0) ? 1 : -1);
  MultiOp g = mop_zero(N, w);
  std::vector<int> sigma(N);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    for_each_mode(N, -w, w, [&](const ModeVec& v) {
      Rat coef = sign;
      ModeVec t = v;
      for (int j = 0; j < N && coef != 0; ++j) {
        const long m = modes[sigma[j]], r = ranks[sigma[j]];
        coef *= d.falling(v[j] + m + r - 1, r - 1);
        t[j] += m;
      }
      if (coef != 0) mop_insert(g, v, t, coef);
    });
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  mop_finalize(g);
  return g;
}

MultiOp make_Wbar(const Deformation& d, int N, long w, long m, long r) {
  if (r < 1) fail(Err::IndexOrder, "rank must be >= 1");
  const Rat sign((r % 2 == 0) ? 1 : -1);
  MultiOp g = mop_zero(N, w);
  for_each_mode(N, -w, w, [&](const ModeVec& v) {
    for (int j = 0; j < N; ++j) {
      Rat coef = sign * d.falling(v[j] + m + r - 1, r - 1);
      if (coef == 0) continue;
      ModeVec t = v;
      t[j] += m;
      mop_insert(g, v, t, coef);
    }
  });
  mop_finalize(g);
  return g;
}

MultiOp vbar_pair_rhs(const Deformation& d, long w, const std::vector<long>& m,
                      const std::vector<long>& r, const std::vector<long>& n,
                      const std::vector<long>& s) {
  const int N = static_cast<int>(m.size());
  if (r.size() != m.size() || n.size() != m.size() || s.size() != m.size())
    fail(Err::ConfigInvalid, "need four equal-length index lists");
  long total = 0;
  for (int j = 0; j < N; ++j) total += m[j] + n[j];
  const Rat K = d.k_eigenvalue(total);

  MultiOp acc = mop_zero(N, w);
  std::vector<int> sigma(N);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<long> alpha(N, 0);
  do {
    // one side of the display; bounds and weights swap between the two
    auto side = [&](bool first) {
      std::function<void(int)> loop = [&](int j) {
        if (j == N) {
          long qe = 0, pe = 0;
          Rat coef(first ? 1 : -1);
          std::vector<long> tr(N), tm(N);
          for (int i = 0; i < N; ++i) {
            const long a = alpha[i];
            const long ms = m[sigma[i]], rs = r[sigma[i]];
            qe += a * (a - 1) / 2;
            pe += a * (a - 1) / 2;
            if (first) {
              qe -= (s[i] - 1) * (ms + rs - 1);
              pe -= (i + 1) * (s[i] - 1);
              coef *= d.binomial(s[i] - 1, a) * d.falling(ms + rs - 1, a);
            } else {
              qe -= (rs - 1) * (n[i] + s[i] - 1);
              pe -= (i + 1) * (rs - 1);
              coef *= d.binomial(rs - 1, a) * d.falling(n[i] + s[i] - 1, a);
            }
            tr[i] = rs + s[i] - a;
            tm[i] = ms + n[i];
          }
          if (coef == 0) return;
          coef *= pow_rat(d.q(), qe) * pow_rat(d.p(), pe);
          acc = mop_add(acc, mop_scale(make_Vbar(d, w, tm, tr), coef));
          return;
        }
        const long bound = first ? s[j] - 1 : r[sigma[j]] - 1;
        for (long a = 0; a <= bound; ++a) {
          alpha[j] = a;
          loop(j + 1);
        }
        alpha[j] = 0;
      };
      loop(0);
    };
    side(true);
    side(false);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  Rat global = K;
  if (N % 2 != 0) global = -global; // (-1)^N
  return mop_scale(acc, global);
}

MultiOp wbar_pair_rhs(const Deformation& d, int N, long w, long m, long r,
                      long n, long s) {
  if (r < 1 || s < 1) fail(Err::IndexOrder, "rank must be >= 1");
  const Rat K = d.k_eigenvalue(m + n);
  MultiOp acc = mop_zero(N, w);
  auto side = [&](long a, long other_low, const Rat& sgn) {
    // sum_k q^{k(k-1)/2 - (a-1) other_low} C^k_{a-1} A^k_{other_low} ...
    for (long k = 0; k <= a - 1; ++k) {
      Rat coef = sgn * pow_rat(d.q(), k * (k - 1) / 2 - (a - 1) * other_low) *
                 d.binomial(a - 1, k) * d.falling(other_low, k);
      if (coef == 0) continue;
      acc = mop_add(acc, mop_scale(make_Wbar(d, N, w, m + n, r + s - 1 - k), coef));
    }
  };
  side(r, n + s - 1, Rat(1));
  side(s, m + r - 1, Rat(-1));
  return mop_scale(acc, K);
}

} // namespace rpq
