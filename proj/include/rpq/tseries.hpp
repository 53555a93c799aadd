#pragma once

#include <functional>
#include <map>

#include "rpq/rational.hpp"

namespace rpq {

// Monomial in the times t_1, t_2, ...; index -> positive exponent.
using TMono = std::map<long, int>;

// t_k carries weight k; the weight of a monomial is the sum over factors.
long tmono_weight(const TMono& m);

// Exact polynomial in the times, truncated to total weight <= wcap. Every
// operation drops monomials above the cap; that is the ring's definition,
// not a silent error. Zero coefficients are never stored.
struct TSeries {
  long wcap = 0;
  std::map<TMono, Rat> c;
};

TSeries ts_zero(long wcap);
TSeries ts_const(long wcap, const Rat& v);
TSeries ts_time(long wcap, long k); // t_k; the zero series when k > wcap

void ts_insert(TSeries& s, const TMono& m, const Rat& v); // accumulate
TSeries ts_add(const TSeries& a, const TSeries& b);       // WindowMismatch on cap clash
TSeries ts_sub(const TSeries& a, const TSeries& b);
TSeries ts_scale(const TSeries& a, const Rat& v);
TSeries ts_mul(const TSeries& a, const TSeries& b);

bool ts_is_zero(const TSeries& a);
bool ts_equal(const TSeries& a, const TSeries& b);
bool ts_is_constant(const TSeries& a);
Rat ts_coeff(const TSeries& a, const TMono& m);
Rat ts_const_part(const TSeries& a);

// exp(a) = sum_j a^j / j!; the constant term must vanish (NonzeroConstantTerm).
TSeries ts_exp(const TSeries& a);

// t_k -> scale(k) t_k, applied monomial-wise.
TSeries ts_rescale(const TSeries& a, const std::function<Rat(long)>& scale);

// Drops every monomial involving t_j with j > kmax.
TSeries ts_drop_above(const TSeries& a, long kmax);

// Partial derivative with respect to t_k.
TSeries ts_dt(const TSeries& a, long k);

std::string ts_to_string(const TSeries& a); // deterministic, for witnesses

} // namespace rpq
