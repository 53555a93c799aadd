#include "rpq/w_single.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "rpq/errors.hpp"

namespace rpq {

GradedOperator make_derivative(const Deformation& d, long w) {
  GradedOperator g = op_zero(-w, w);
  for (long n = -w; n <= w; ++n) op_insert(g, n, n - 1, d.number(n));
  op_finalize(g);
  return g;
}

GradedOperator make_zpow(long w, long k) {
  GradedOperator g = op_zero(-w, w);
  for (long n = -w; n <= w; ++n) op_insert(g, n, n + k, Rat(1));
  op_finalize(g);
  return g;
}

GradedOperator make_W(const Deformation& d, long w, long m, long r) {
  if (r < 1) fail(Err::IndexOrder, "rank must be >= 1");
  GradedOperator g = op_zero(-w, w);
  for (long n = -w; n <= w; ++n) op_insert(g, n, n + m, d.falling(n, r - 1));
  op_finalize(g);
  return g;
}

GradedOperator fock_lower(const Deformation& d, long w) {
  return make_derivative(d, w);
}

GradedOperator fock_raise(long w) { return make_zpow(w, 1); }

GradedOperator fock_number(long w) {
  GradedOperator g = op_zero(-w, w);
  for (long n = -w; n <= w; ++n) op_insert(g, n, n, Rat(n));
  op_finalize(g);
  return g;
}

GradedOperator fock_number_diag(const Deformation& d, long w, long shift) {
  GradedOperator g = op_zero(-w, w);
  for (long n = -w; n <= w; ++n) op_insert(g, n, n, d.number(n + shift));
  op_finalize(g);
  return g;
}

GradedOperator make_calW(const Deformation& d, long w, long s, long m) {
  if (s < 1) fail(Err::IndexOrder, "rank must be >= 1");
  if (m + s - 1 < 0) fail(Err::UnsupportedExponent, "negative derivative power");
  GradedOperator g = op_zero(-w, w);
  Rat sign((s % 2 == 0) ? 1 : -1);
  Rat half(1);
  for (long k = 0; k <= s - 1; ++k) {
    Rat coef = sign * d.binomial(s - 1, k) * d.falling(m + s - 1, k) * half;
    half /= 2;
    if (coef == 0) continue;
    const long dexp = m + s - 1 - k; // >= 0 whenever coef != 0
    for (long n = -w; n <= w; ++n) op_insert(g, n, n - m, coef * d.falling(n, dexp));
  }
  op_finalize(g);
  return g;
}

namespace {

GradedOperator calw_step(const Deformation& d, long w, long s, long m) {
  if (s == 1) {
    if (m < 0) fail(Err::UnsupportedExponent, "negative derivative power");
    GradedOperator g = op_zero(-w, w);
    for (long n = -w; n <= w; ++n) op_insert(g, n, n - m, -d.falling(n, m));
    op_finalize(g);
    return g;
  }
  if (m + s == 0) fail(Err::DegenerateRecursion, "step divides by 2(m+s) = 0");
  GradedOperator prev = calw_step(d, w, s - 1, m + 2);
  GradedOperator comm = op_commutator(make_zpow(w, 2), prev);
  return op_scale(comm, make_rat(1, 2 * (m + s)));
}

} // namespace

GradedOperator make_calW_recursive(const Deformation& d, long w, long s, long m) {
  if (s < 1) fail(Err::IndexOrder, "rank must be >= 1");
  // commutators with x^2 shrink the window asymmetrically; run the recursion
  // on a padded window and restrict, so the result lives on exactly [-w, w]
  const long pad = (s - 1) * (std::abs(m) + 2 * s + 4);
  return op_restrict(calw_step(d, w + pad, s, m), -w, w);
}

GradedOperator make_L(const Deformation& d, long w, long m) {
  GradedOperator g = op_zero(-w, w);
  for (long n = -w; n <= w; ++n) op_insert(g, n, n + m, -d.number(n));
  op_finalize(g);
  return g;
}

GradedOperator make_F(const Deformation& d, long w, long m, const Rat& nu) {
  return op_add(make_calW(d, w, 2, m), op_scale(make_calW(d, w, 1, m), nu * m));
}

GradedOperator make_R(const Deformation& d, long w, long m) {
  return make_calW(d, w, 1, m);
}

GradedOperator pair_rhs(const Deformation& d, long w, long m, long r, long n,
                        long s, long* dropped) {
  const Rat K = d.k_eigenvalue(m + n);
  GradedOperator acc = op_zero(-w, w);
  auto side = [&](long a, long bmode, long upper, const Rat& sgn) {
    // sum_j q^{(a-1-j) upper} p^j C^j_{a-1} A^j_{upper} W^{r+s-1-j}_{m+n}
    for (long j = 0; j <= a - 1; ++j) {
      Rat coef = pow_rat(d.q(), (a - 1 - j) * upper) * pow_rat(d.p(), j) *
                 d.binomial(a - 1, j) * d.falling(upper, j) * sgn;
      if (coef == 0) continue;
      const long rank = r + s - 1 - j;
      if (rank < 1) {
        if (dropped) ++*dropped;
        continue;
      }
      acc = op_add(acc, op_scale(make_W(d, w, bmode, rank), coef));
    }
  };
  side(r, m + n, n + s - 1, Rat(1));
  side(s, m + n, m + r - 1, Rat(-1));
  return op_scale(acc, K);
}

GradedOperator pair_rank2_rhs(const Deformation& d, long w, long m, long n) {
  const Rat K = d.k_eigenvalue(m + n);
  Rat c3 = pow_rat(d.q(), n + 1) - pow_rat(d.q(), m + 1);
  Rat c2 = d.number(n + 1) - d.number(m + 1);
  GradedOperator acc = op_add(op_scale(make_W(d, w, m + n, 3), c3),
                              op_scale(make_W(d, w, m + n, 2), c2));
  return op_scale(acc, K);
}

GradedOperator n_algebra_rhs(const Deformation& d, long w,
                             const std::vector<long>& modes,
                             const std::vector<long>& ranks,
                             long* dropped) {
  const int n = static_cast<int>(modes.size());
  if (ranks.size() != modes.size() || n < 2)
    fail(Err::ConfigInvalid, "need matching mode and rank lists, arity >= 2");
  long total_mode = 0, total_rank = 0;
  for (int i = 0; i < n; ++i) {
    total_mode += modes[i];
    total_rank += ranks[i];
  }
  GradedOperator acc = op_zero(-w, w);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<long> alpha(n, 0), beta(n, 0);
  do {
    const int sgn = perm_sign(perm);
    // DFS over alpha_1..alpha_{n-1} with running bound beta_k
    std::function<void(int, long, long, const Rat&)> rec =
        [&](int k, long sum_r, long sum_a, const Rat& coef) {
          // k is 1-based slot; sum_r = r_{i_1}+..+r_{i_k}, sum_a = alpha_1+..+alpha_{k-1}
          if (k == n) {
            long lam = 0;
            for (int j = 1; j <= n - 1; ++j)
              lam += (beta[j] - sum_a) * (modes[perm[j]] + ranks[perm[j]] - 1);
            Rat full = coef * pow_rat(d.q(), lam) * pow_rat(d.p(), sum_a) * sgn;
            if (full == 0) return;
            const long rank = total_rank - (n - 1) - sum_a;
            if (rank < 1) {
              if (dropped) ++*dropped;
              return;
            }
            acc = op_add(acc, op_scale(make_W(d, w, total_mode, rank), full));
            return;
          }
          // beta_k = r_{i_1}+..+r_{i_k} - k - (alpha_1+..+alpha_{k-1})
          const long bk = sum_r - k - sum_a;
          beta[k] = bk;
          for (long a = 0; a <= bk; ++a) {
            Rat c = coef * d.binomial(bk, a) *
                    d.falling(modes[perm[k]] + ranks[perm[k]] - 1, a);
            if (c == 0) continue;
            rec(k + 1, sum_r + ranks[perm[k]], sum_a + a, c);
          }
        };
    // slot 1 consumes r_{i_1}; beta_1 = r_{i_1} - 1
    rec(1, ranks[perm[0]], 0, Rat(1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  Rat pref = d.k_eigenvalue(total_mode) * d.bracket_prefactor(total_mode, n);
  return op_scale(acc, pref);
}

GradedOperator paper_bracket(const Deformation& d,
                             const std::vector<GradedOperator>& ops,
                             long total_mode) {
  GradedOperator b = n_bracket(ops);
  Rat pref = d.k_eigenvalue(total_mode) *
             d.bracket_prefactor(total_mode, static_cast<int>(ops.size()));
  return op_scale(b, pref);
}

std::optional<std::map<long, Rat>> ladder_solve(const Deformation& d,
                                                const GradedOperator& op,
                                                long shift, long beta_max) {
  const long blo = std::max(0L, -shift);
  if (beta_max < blo) {
    if (op_is_zero(op)) return std::map<long, Rat>{};
    return std::nullopt;
  }
  const int cols = static_cast<int>(beta_max - blo + 1);
  // mode homogeneity first: every action lands at mode + shift
  for (const auto& [mode, row] : op.act)
    for (const auto& [tgt, c] : row)
      if (c != 0 && tgt != mode + shift) return std::nullopt;

  std::vector<std::vector<Rat>> rows; // cols coefficients then rhs
  for (long mode = op.lo; mode <= op.hi; ++mode) {
    std::vector<Rat> row(cols + 1, Rat(0));
    for (int j = 0; j < cols; ++j) row[j] = d.falling(mode, blo + j);
    auto it = op.act.find(mode);
    if (it != op.act.end()) {
      auto jt = it->second.find(mode + shift);
      if (jt != it->second.end()) row[cols] = jt->second;
    }
    rows.push_back(std::move(row));
  }
  // exact Gaussian elimination with full validation
  int rank = 0;
  for (int col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][col] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      Rat f = rows[i][col] / rows[rank][col];
      for (int j = col; j <= cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  // read the reduced system: each pivot row gives one coefficient
  std::map<long, Rat> sol;
  {
    int r = 0;
    for (int col = 0; col < cols; ++col) {
      if (r < static_cast<int>(rows.size()) && rows[r][col] != 0) {
        sol[blo + col] = rows[r][cols] / rows[r][col];
        ++r;
      } else {
        fail(Err::WindowExhausted, "mode window too small to separate ladder ranks");
      }
    }
    // leftover rows must reduce to 0 = 0, else the operator leaves the span
    for (; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][cols] != 0) return std::nullopt;
  }
  for (auto it = sol.begin(); it != sol.end();)
    it = (it->second == 0) ? sol.erase(it) : std::next(it);
  return sol;
}

bool op_proportional(const GradedOperator& a, const GradedOperator& b, long lo,
                     long hi, Rat& scalar, std::string& witness) {
  const long mlo = std::max({a.lo, b.lo, lo});
  const long mhi = std::min({a.hi, b.hi, hi});
  if (mlo > mhi) fail(Err::WindowExhausted, "no shared modes to compare");
  Rat found(0);
  bool have = false;
  for (long n = mlo; n <= mhi && !have; ++n) {
    auto it = b.act.find(n);
    if (it == b.act.end()) continue;
    for (const auto& [tgt, c] : it->second) {
      if (c == 0) continue;
      auto ia = a.act.find(n);
      Rat av(0);
      if (ia != a.act.end()) {
        auto ja = ia->second.find(tgt);
        if (ja != ia->second.end()) av = ja->second;
      }
      found = av / c;
      have = true;
      break;
    }
  }
  if (!have) {
    // right side vanishes on the window
    if (auto wtn = op_diff_witness(a, op_zero(mlo, mhi), mlo, mhi)) {
      std::ostringstream os;
      os << "right side vanishes but left acts at mode " << wtn->mode;
      witness = os.str();
      return false;
    }
    scalar = 1;
    return true;
  }
  scalar = found;
  if (auto wtn = op_diff_witness(a, op_scale(b, scalar), mlo, mhi)) {
    std::ostringstream os;
    os << "ratio breaks at mode " << wtn->mode << " target " << wtn->target << ": "
       << rat_to_string(wtn->lhs) << " vs scaled " << rat_to_string(wtn->rhs);
    witness = os.str();
    return false;
  }
  return true;
}

namespace {

// single-mode eigenvalue weight of the pairing term
Rat pairing_weight(const Deformation& d, long m) {
  if (m == 0) return Rat(0);
  Rat denom = pow_rat(d.q(), m) * d.number(2 * m);
  return pow_rat(d.p(), m) * d.number(m) / denom * d.number(m - 1) * d.number(m) *
         d.number(m + 1);
}

} // namespace

Rat central_f(const Deformation& d, const std::vector<long>& modes) {
  long total = 0;
  for (long m : modes) total += m;
  return d.k_eigenvalue(total) *
         d.bracket_prefactor(total, static_cast<int>(modes.size())) *
         d.vandermonde(modes, 1);
}

Rat central_C(const Deformation& d, const std::vector<long>& modes, const Rat& c,
              bool sixth) {
  const int twon = static_cast<int>(modes.size());
  if (twon % 2 != 0 || twon == 0) fail(Err::ConfigInvalid, "need an even mode count");
  const int n = twon / 2;
  std::vector<int> perm(twon);
  for (int i = 0; i < twon; ++i) perm[i] = i;
  Rat sum(0);
  do {
    Rat term(perm_sign(perm));
    for (int k = 0; k < n && term != 0; ++k) {
      long a = modes[perm[2 * k]];
      long b = modes[perm[2 * k + 1]];
      term = (a + b == 0) ? term * pairing_weight(d, a) : Rat(0);
    }
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  Rat denom = Rat(sixth ? 6 : 12) * pow_rat(Rat(2), n) * factorial_int(n);
  return c / denom * sum;
}

Rat central_example(const Deformation& d, long m, const Rat& c) {
  return c / 12 * pairing_weight(d, m);
}

Rat cocycle_residual(const Deformation& d, const std::vector<long>& modes, int n,
                     const Rat& c) {
  const int count = static_cast<int>(modes.size());
  if (count != 4 * n - 1) fail(Err::ConfigInvalid, "need 4n-1 modes");
  std::vector<int> perm(count);
  for (int i = 0; i < count; ++i) perm[i] = i;
  Rat sum(0);
  do {
    std::vector<long> head(2 * n);
    long head_sum = 0;
    for (int i = 0; i < 2 * n; ++i) {
      head[i] = modes[perm[i]];
      head_sum += head[i];
    }
    Rat fval = central_f(d, head);
    if (fval == 0) continue;
    std::vector<long> tail{head_sum};
    for (int i = 2 * n; i < count; ++i) tail.push_back(modes[perm[i]]);
    sum += Rat(perm_sign(perm)) * fval * central_C(d, tail, c, false);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

Rat structure_f4(const Deformation& d, const std::vector<long>& modes,
                 const std::vector<long>& ranks) {
  if (modes.size() != 4 || ranks.size() != 4) fail(Err::ConfigInvalid, "need four operands");
  std::vector<int> perm{0, 1, 2, 3};
  Rat total(0);
  do {
    const int sgn = perm_sign(perm);
    const long s2 = ranks[perm[1]], s3 = ranks[perm[2]], s4 = ranks[perm[3]];
    for (long r1 = 0; r1 <= 4; ++r1)
      for (long r2 = 0; r1 + r2 <= 4; ++r2)
        for (long r3 = 0; r1 + r2 + r3 <= 4; ++r3)
          for (long r4 = 0; r1 + r2 + r3 + r4 <= 4; ++r4)
            for (long a3 = 0; r1 + r2 + r3 + r4 + a3 <= 4; ++a3)
              for (long a2 = 0; r1 + r2 + r3 + r4 + a3 + a2 <= 4; ++a2) {
                const long a1 = 4 - (r1 + r2 + r3 + r4 + a3 + a2);
                std::vector<long> rv{r1, r2, r3, r4};
                Rat coef(sgn);
                for (int i = 0; i < 4; ++i)
                  coef *= d.binomial_or_zero(ranks[i] - 1, rv[i]);
                if (coef == 0) continue;
                const long rp2 = rv[perm[1]], rp3 = rv[perm[2]], rp4 = rv[perm[3]];
                coef *= d.binomial_or_zero(s4 - 1 - rp4, a3);
                coef *= d.binomial_or_zero(s3 + s4 - 2 - rp4 - rp3, a2);
                coef *= d.binomial_or_zero(s2 + s3 + s4 - 2 - rp4 - rp3 - rp2, a1);
                if (coef == 0) continue;
                const long alphas[4] = {a1, a2, a3, 0};
                for (int k = 0; k < 4; ++k)
                  coef *= d.falling(modes[perm[k]] + ranks[perm[k]] - 1,
                                    rv[perm[k]] + alphas[k]);
                if (coef == 0) continue;
                total += coef / pow_rat(Rat(2), r1 + r2 + r3 + r4);
              }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return -total;
}

Rat structure_g5(const Deformation& d, const std::vector<long>& modes,
                 const std::vector<long>& ranks) {
  if (modes.size() != 5 || ranks.size() != 5) fail(Err::ConfigInvalid, "need five operands");
  std::vector<int> perm{0, 1, 2, 3, 4};
  Rat total(0);
  do {
    const int sgn = perm_sign(perm);
    const long s2 = ranks[perm[1]], s3 = ranks[perm[2]], s4 = ranks[perm[3]],
               s5 = ranks[perm[4]];
    std::vector<long> rv(5, 0);
    // enumerate r vectors with sum <= 4, then alphas completing the budget
    std::function<void(int, long)> loop = [&](int pos, long used) {
      if (pos == 5) {
        for (long a4 = 0; used + a4 <= 4; ++a4)
          for (long a3 = 0; used + a4 + a3 <= 4; ++a3)
            for (long a2 = 0; used + a4 + a3 + a2 <= 4; ++a2) {
              const long a1 = 4 - (used + a4 + a3 + a2);
              Rat coef(sgn);
              for (int i = 0; i < 5; ++i)
                coef *= d.binomial_or_zero(ranks[i] - 1, rv[i]);
              if (coef == 0) continue;
              const long rp2 = rv[perm[1]], rp3 = rv[perm[2]], rp4 = rv[perm[3]],
                         rp5 = rv[perm[4]];
              coef *= d.binomial_or_zero(s5 - 1 - rp5, a4);
              coef *= d.binomial_or_zero(s4 + s5 - 2 - rp4 - rp5, a3);
              coef *= d.binomial_or_zero(s3 + s4 + s5 - 3 - rp3 - rp4 - rp5 - a3 - a4, a2);
              coef *= d.binomial_or_zero(
                  s2 + s3 + s4 + s5 - 4 - rp2 - rp3 - rp4 - rp5 - a2 - a3 - a4, a1);
              if (coef == 0) continue;
              const long alphas[5] = {a1, a2, a3, a4, 0};
              for (int k = 0; k < 5; ++k)
                coef *= d.falling(modes[perm[k]] + ranks[perm[k]] - 1,
                                  rv[perm[k]] + alphas[k]);
              if (coef == 0) continue;
              total += coef / pow_rat(Rat(2), used);
            }
        return;
      }
      for (long r = 0; used + r <= 4; ++r) {
        rv[pos] = r;
        loop(pos + 1, used + r);
      }
      rv[pos] = 0;
    };
    loop(0, 0);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return -total;
}

Rat multibracket_constant(const Deformation& d, long s) {
  if (s < 1) fail(Err::IndexOrder, "rank must be >= 1");
  const int n = static_cast<int>(2 * s - 1);
  std::vector<long> rv(n, 0), av(n, 0);
  Rat total(0);
  // DFS over the r vector, then alphas from slot n-1 down to 1
  std::function<void(int)> alphas = [&](int j) {
    if (j == 0) {
      std::vector<int> image(n);
      std::vector<bool> seen(n, false);
      for (int i = 0; i < n - 1; ++i) image[i] = static_cast<int>(av[i] + rv[i]);
      image[n - 1] = static_cast<int>(rv[n - 1]);
      for (int v : image) {
        if (v < 0 || v >= n || seen[v]) return;
        seen[v] = true;
      }
      Rat term(perm_sign(image));
      long rsum = 0;
      for (int i = 0; i < n; ++i) {
        term *= d.binomial(s - 1, rv[i]);
        rsum += rv[i];
      }
      for (int i = 0; i < n - 1; ++i) {
        long b = (n - 1 - i) * (s - 1);
        for (int k = i + 1; k < n; ++k) b -= rv[k];
        for (int k = i + 1; k < n - 1; ++k) b -= av[k];
        term *= d.binomial_or_zero(b, av[i]);
      }
      if (term == 0) return;
      total += term / pow_rat(Rat(2), rsum);
      return;
    }
    // bound for alpha_j (1-based j; av index j-1)
    long b = (n - j) * (s - 1);
    for (int k = j; k < n; ++k) b -= rv[k];
    for (int k = j; k < n - 1; ++k) b -= av[k];
    if (b < 0) return;
    for (long a = 0; a <= b; ++a) {
      av[j - 1] = a;
      alphas(j - 1);
    }
    av[j - 1] = 0;
  };
  std::function<void(int)> rvec = [&](int pos) {
    if (pos == n) {
      alphas(n - 1);
      return;
    }
    for (long r = 0; r <= s - 1; ++r) {
      rv[pos] = r;
      rvec(pos + 1);
    }
    rv[pos] = 0;
  };
  rvec(0);
  if (s % 2 == 0) total = -total; // (-1)^{s+1}
  return total;
}

} // namespace rpq
