#pragma once

#include "rpq/deformation.hpp"
#include "rpq/toperator.hpp"

namespace rpq {

// Scale-a falling factorial: product of number_scaled over k descending
// arguments starting at n; empty product 1.
Rat falling_scaled(const Deformation& d, long a, long n, long k);

// Scale-a constraint operator in the times, assembled branch by branch:
// branch i < r-1 couples the unscaled binomial, the scale-a falling
// factorials, the printed power weights, and Bell coefficients with
// variables above t_k zeroed; branch i = r-1 degenerates to the single
// term (scale-a falling) m! d/dt_m. Derivative indices above kcap are
// dropped and counted.
TOperator toy_time_route(const Deformation& d, long a, long gamma, long m,
                         long r, long kcap, long wcap, long* dropped = nullptr);

// Independent route: expand -D_a^{r-1}[x^{m+gamma+r-1} E] / (x^gamma E)
// with E = exp(sum_{s<=kcap} t_s x^s/s!) in the bigraded ring and read the
// induced operator sum_j c_j(t) j! d/dt_j. Emitted derivative indices stay
// inside the exact window j <= min(kcap, m + wcap).
TOperator toy_x_route(const Deformation& d, long a, long gamma, long m,
                      long r, long kcap, long wcap);

} // namespace rpq
