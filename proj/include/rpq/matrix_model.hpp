#pragma once

#include "rpq/deformation.hpp"
#include "rpq/toperator.hpp"

namespace rpq {

// Constraint operator of rank r at mode m for N integration variables,
// assembled from the general branch sum: branch j carries the rescaled
// Bell coefficients B_l(t^{r-1-j}), the determinant operator of order
// 2(r-1-j), and one derivative at index l + m - 2(r-1-j)N. Derivative
// indices below 0 or above kcap are dropped and counted. Built-in
// families only (the eigenvalue factor has no custom-family value here).
TOperator make_wtilde(const Deformation& d, int N, long m, long r,
                      long kcap, long wcap, long* dropped = nullptr);

// The same operator transcribed term by term from the printed low-rank
// expansions; defined for r = 2, 3, 4 only (IndexOrder otherwise). An
// independent route for cross-validation.
TOperator make_wtilde_lowrank(const Deformation& d, int N, long m, long r,
                              long kcap, long wcap, long* dropped = nullptr);

// Theta-style product truncated to `factors` leading factors per side;
// factors = 0 gives 1. P, Q enter the scalar substitution (default 1, 1).
// PoleHit when a factor denominator vanishes.
Rat theta_eval(const Deformation& d, const Rat& x, long factors, long P, long Q);

// The two displayed branch functions: F depends on whether the kernel
// vanishes at (1, 0); G pairs with it.
Rat theta_F(const Deformation& d, const Rat& y);
Rat theta_G(const Deformation& d, long P, long Q);

} // namespace rpq
