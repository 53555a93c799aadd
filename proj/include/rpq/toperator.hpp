#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rpq/tseries.hpp"

namespace rpq {

// Multiset of time-derivative symbols: index -> positive power.
using DMulti = std::map<long, int>;

// Formal operator sum_d c_d(t) prod_k (d/dt_k)^{d_k}, in normal form: one
// coefficient series per derivative multiset, zeros erased.
struct TOperator {
  long wcap = 0;
  std::map<DMulti, TSeries> terms;
};

TOperator top_zero(long wcap);
TOperator top_identity(long wcap);
void top_add_term(TOperator& a, const DMulti& d, const TSeries& coeff);
TOperator top_add(const TOperator& a, const TOperator& b);
TOperator top_sub(const TOperator& a, const TOperator& b);
TOperator top_scale(const TOperator& a, const Rat& v);
TOperator top_scale_series(const TOperator& a, const TSeries& s); // left factor
bool top_is_zero(const TOperator& a);
bool top_equal(const TOperator& a, const TOperator& b);

struct TopMismatch {
  DMulti d;
  TMono m;
  Rat lhs, rhs;
};
// First difference between the normal forms, smallest multiset first.
std::optional<TopMismatch> top_diff_witness(const TOperator& a, const TOperator& b);

// a after b. The right factor must have constant coefficients; anything
// else would need the product rule, which no assembled operator requires
// (UnsupportedExponent otherwise).
TOperator top_mul(const TOperator& a, const TOperator& b);

// Proportionality with one global scalar: a = scalar * b on the shared
// normal form. Fails with a witness when the shapes or ratios differ.
bool top_proportional(const TOperator& a, const TOperator& b, Rat& scalar,
                      std::string& witness);

std::string dmulti_to_string(const DMulti& d);

// Complete Bell polynomials B_0..B_kmax of the times, read off the
// exponential generating product; B_k is homogeneous of weight k.
std::vector<TSeries> bell_coefficients(long kmax);
// Independent route: B_{n+1} = sum_i binom(n, i) t_{i+1} B_{n-i}.
std::vector<TSeries> bell_recursion(long kmax);

// Determinant operator of order m in N variables: 1/N! times the
// determinant of the banded matrix with (m(i-j+1))! d/dt_{m(i-j+1)} at and
// below the diagonal and the integer i on the superdiagonal of row i.
// m = 0 or N = 0 gives the identity.
TOperator det_operator(long m, int N, long wcap);

// Symmetrized multi-index operator via the subset recursion
// D_{list} = 1/N sum_k (-1)^{k-1} k! sum_{|S|=k} (sum S)! d/dt_{sum S} D_{list-S};
// the empty list gives the identity.
TOperator multi_index_operator(const std::vector<long>& modes, long wcap);

// Applies T to the formal exponential exp(sum_k t_k p_k / k!) at concrete
// points xs, where p_k = sum_j xs_j^k: d/dt_k acts as d/dt_k + p_k/k!.
// Returns the cofactor s(t) with T exp = s exp; exact, no truncation loss
// for constant-coefficient T applied to weight-0 data.
TSeries top_apply_exp(const TOperator& T, const std::vector<Rat>& xs);

} // namespace rpq
