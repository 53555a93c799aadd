#include "rpq/graded_operator.hpp"

#include <algorithm>

#include "rpq/errors.hpp"

namespace rpq {

GradedOperator op_zero(long lo, long hi) {
  GradedOperator g;
  g.lo = lo;
  g.hi = hi;
  return g;
}

GradedOperator op_identity(long lo, long hi) {
  GradedOperator g = op_zero(lo, hi);
  for (long n = lo; n <= hi; ++n) g.act[n][n] = Rat(1);
  op_finalize(g);
  return g;
}

void op_insert(GradedOperator& g, long mode, long target, const Rat& c) {
  if (mode < g.lo || mode > g.hi) fail(Err::WindowMismatch, "insert outside domain");
  g.act[mode][target] += c;
}

void op_finalize(GradedOperator& g) {
  bool any = false;
  long smin = 0, smax = 0;
  for (auto it = g.act.begin(); it != g.act.end();) {
    auto& row = it->second;
    for (auto jt = row.begin(); jt != row.end();) {
      if (jt->second == 0) {
        jt = row.erase(jt);
        continue;
      }
      long s = jt->first - it->first;
      if (!any) {
        smin = smax = s;
        any = true;
      } else {
        smin = std::min(smin, s);
        smax = std::max(smax, s);
      }
      ++jt;
    }
    if (row.empty())
      it = g.act.erase(it);
    else
      ++it;
  }
  g.smin = any ? smin : 0;
  g.smax = any ? smax : 0;
}

namespace {
GradedOperator op_linear(const GradedOperator& a, const GradedOperator& b, const Rat& cb) {
  long lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
  if (lo > hi) fail(Err::WindowExhausted, "sum of operators with disjoint domains");
  GradedOperator g = op_zero(lo, hi);
  for (const auto& [n, row] : a.act) {
    if (n < lo || n > hi) continue;
    for (const auto& [t, c] : row) g.act[n][t] += c;
  }
  for (const auto& [n, row] : b.act) {
    if (n < lo || n > hi) continue;
    for (const auto& [t, c] : row) g.act[n][t] += cb * c;
  }
  op_finalize(g);
  return g;
}
} // namespace

GradedOperator op_add(const GradedOperator& a, const GradedOperator& b) {
  return op_linear(a, b, Rat(1));
}

GradedOperator op_sub(const GradedOperator& a, const GradedOperator& b) {
  return op_linear(a, b, Rat(-1));
}

GradedOperator op_scale(const GradedOperator& a, const Rat& c) {
  GradedOperator g = op_zero(a.lo, a.hi);
  if (c != 0)
    for (const auto& [n, row] : a.act)
      for (const auto& [t, v] : row) g.act[n][t] = c * v;
  op_finalize(g);
  return g;
}

GradedOperator op_compose(const GradedOperator& a, const GradedOperator& b) {
  if (a.domain_empty() || b.domain_empty())
    fail(Err::WindowExhausted, "compose with empty domain");
  long lo = std::max(b.lo, a.lo - b.smin);
  long hi = std::min(b.hi, a.hi - b.smax);
  if (lo > hi) fail(Err::WindowExhausted, "composition window is empty");
  GradedOperator g = op_zero(lo, hi);
  for (const auto& [n, row] : b.act) {
    if (n < lo || n > hi) continue;
    for (const auto& [t1, c1] : row) {
      auto it = a.act.find(t1);
      if (it == a.act.end()) continue;
      for (const auto& [t2, c2] : it->second) g.act[n][t2] += c1 * c2;
    }
  }
  op_finalize(g);
  return g;
}

GradedOperator op_commutator(const GradedOperator& a, const GradedOperator& b) {
  return op_sub(op_compose(a, b), op_compose(b, a));
}

GradedOperator op_restrict(const GradedOperator& a, long lo, long hi) {
  if (lo < a.lo || hi > a.hi || lo > hi)
    fail(Err::WindowExhausted, "restriction exceeds the operator domain");
  GradedOperator g = op_zero(lo, hi);
  for (long n = lo; n <= hi; ++n) {
    auto it = a.act.find(n);
    if (it != a.act.end()) g.act[n] = it->second;
  }
  op_finalize(g);
  return g;
}

bool op_is_zero(const GradedOperator& a) { return a.act.empty(); }

std::optional<OpMismatch> op_diff_witness(const GradedOperator& a, const GradedOperator& b,
                                          long lo, long hi) {
  lo = std::max({lo, a.lo, b.lo});
  hi = std::min({hi, a.hi, b.hi});
  if (lo > hi) fail(Err::WindowExhausted, "no shared modes to compare");
  // order: |mode| ascending, positive before negative
  std::vector<long> modes;
  for (long n = lo; n <= hi; ++n) modes.push_back(n);
  std::sort(modes.begin(), modes.end(), [](long x, long y) {
    long ax = std::labs(x), ay = std::labs(y);
    if (ax != ay) return ax < ay;
    return x > y;
  });
  static const std::map<long, Rat> kEmpty;
  for (long n : modes) {
    auto ita = a.act.find(n);
    auto itb = b.act.find(n);
    const auto& ra = ita == a.act.end() ? kEmpty : ita->second;
    const auto& rb = itb == b.act.end() ? kEmpty : itb->second;
    if (ra == rb) continue;
    std::map<long, Rat> targets;
    for (const auto& [t, c] : ra) targets[t] = c;
    for (const auto& [t, c] : rb) targets.try_emplace(t, 0);
    for (const auto& [t, c] : targets) {
      auto jb = rb.find(t);
      Rat rv = jb == rb.end() ? Rat(0) : jb->second;
      if (c != rv) return OpMismatch{n, t, c, rv};
    }
  }
  return std::nullopt;
}

LaurentPoly op_apply(const GradedOperator& g, const LaurentPoly& f) {
  LaurentPoly out = lp_zero(f.window);
  for (const auto& [d, c] : f.coef) {
    if (d < g.lo || d > g.hi) fail(Err::WindowExhausted, "operand support outside domain");
    auto it = g.act.find(d);
    if (it == g.act.end()) continue;
    for (const auto& [t, v] : it->second) {
      if (t < -f.window || t > f.window)
        fail(Err::WindowMismatch, "image escapes polynomial window");
      Rat& slot = out.coef[t];
      slot += c * v;
      if (slot == 0) out.coef.erase(t);
    }
  }
  return out;
}

int perm_sign(const std::vector<int>& perm) {
  int s = 1;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) s = -s;
  return s;
}

namespace {
// DFS over permutations sharing left-product prefixes.
void bracket_dfs(const std::vector<GradedOperator>& ops, std::vector<int>& chosen,
                 std::vector<bool>& used, const GradedOperator* prefix,
                 GradedOperator& acc, bool& acc_init) {
  size_t n = ops.size();
  if (chosen.size() == n) {
    Rat s(perm_sign(chosen));
    GradedOperator term = op_scale(*prefix, s);
    acc = acc_init ? op_add(acc, term) : term;
    acc_init = true;
    return;
  }
  for (size_t i = 0; i < n; ++i) {
    if (used[i]) continue;
    used[i] = true;
    chosen.push_back(static_cast<int>(i));
    GradedOperator next = prefix ? op_compose(*prefix, ops[i]) : ops[i];
    bracket_dfs(ops, chosen, used, &next, acc, acc_init);
    chosen.pop_back();
    used[i] = false;
  }
}
} // namespace

GradedOperator n_bracket(const std::vector<GradedOperator>& ops) {
  if (ops.empty()) fail(Err::WindowExhausted, "bracket of no operators");
  GradedOperator acc;
  bool init = false;
  std::vector<int> chosen;
  std::vector<bool> used(ops.size(), false);
  bracket_dfs(ops, chosen, used, nullptr, acc, init);
  return acc;
}

GradedOperator gji_residual(const std::vector<GradedOperator>& ops, int arity) {
  int total = 2 * arity - 1;
  if (static_cast<int>(ops.size()) != total)
    fail(Err::ConfigInvalid, "generalized Jacobi needs 2*arity-1 operands");
  GradedOperator acc;
  bool init = false;
  std::vector<int> select(total, 0);
  std::fill(select.begin(), select.begin() + arity, 1);
  std::sort(select.begin(), select.end(), std::greater<int>());
  // iterate over all combinations via std::prev_permutation on the mask
  do {
    std::vector<int> inner_idx, outer_idx;
    for (int i = 0; i < total; ++i)
      (select[i] ? inner_idx : outer_idx).push_back(i);
    std::vector<int> arrangement = inner_idx;
    arrangement.insert(arrangement.end(), outer_idx.begin(), outer_idx.end());
    Rat sgn(perm_sign(arrangement));
    std::vector<GradedOperator> inner_ops;
    for (int i : inner_idx) inner_ops.push_back(ops[i]);
    std::vector<GradedOperator> outer_ops;
    outer_ops.push_back(n_bracket(inner_ops));
    for (int i : outer_idx) outer_ops.push_back(ops[i]);
    GradedOperator term = op_scale(n_bracket(outer_ops), sgn);
    acc = init ? op_add(acc, term) : term;
    init = true;
  } while (std::prev_permutation(select.begin(), select.end()));
  return acc;
}

GradedOperator random_banded(std::mt19937_64& rng, long lo, long hi, long band) {
  std::uniform_int_distribution<long> shift(-band, band);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  std::uniform_int_distribution<int> count(1, 2);
  GradedOperator g = op_zero(lo, hi);
  for (long n = lo; n <= hi; ++n) {
    int k = count(rng);
    for (int i = 0; i < k; ++i) {
      long t = n + shift(rng);
      g.act[n][t] += make_rat(num(rng), den(rng));
    }
  }
  op_finalize(g);
  return g;
}

} // namespace rpq
