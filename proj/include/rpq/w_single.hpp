#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rpq/deformation.hpp"
#include "rpq/graded_operator.hpp"

namespace rpq {

// ---- single-variable generators on the mode window [-w, w] ----

// z^n -> [n] z^{n-1}.
GradedOperator make_derivative(const Deformation& d, long w);
// multiplication by z^k (k may be negative).
GradedOperator make_zpow(long w, long k);
// W^r_m = z^{m+r-1} D^{r-1}, r >= 1: z^n -> A^{r-1}_n z^{n+m}.
GradedOperator make_W(const Deformation& d, long w, long m, long r);

// Fock triple: lowering with eigenvalue [n], raising, number operator.
GradedOperator fock_lower(const Deformation& d, long w);
GradedOperator fock_raise(long w);
GradedOperator fock_number(long w);
// diag([n + shift]), for relation right-hand sides.
GradedOperator fock_number_diag(const Deformation& d, long w, long shift);

// ---- derivative-power tower (rank s, mode m, needs m + s - 1 >= 0) ----

// Closed expansion (-1)^s sum_k (C A / 2^k) x^{s-1-k} D^{m+s-1-k}.
GradedOperator make_calW(const Deformation& d, long w, long s, long m);
// Same generator from the two-step recursion [x^2, prev] / (2(m+s));
// DegenerateRecursion when a step hits m + s = 0.
GradedOperator make_calW_recursive(const Deformation& d, long w, long s, long m);
// L_m = -x^{m+1} D.
GradedOperator make_L(const Deformation& d, long w, long m);
// Virasoro-Witt pair: F_m = calW^2_m + nu m calW^1_m, R_m = calW^1_m.
GradedOperator make_F(const Deformation& d, long w, long m, const Rat& nu);
GradedOperator make_R(const Deformation& d, long w, long m);

// ---- displayed right-hand sides (rank targets < 1 dropped and counted) ----

// Pair algebra for [W^r_m, W^s_n].
GradedOperator pair_rhs(const Deformation& d, long w, long m, long r, long n,
                        long s, long* dropped = nullptr);
// Rank-2 remark: K((q^{n+1} - q^{m+1}) W^3 + ([n+1] - [m+1]) W^2).
GradedOperator pair_rank2_rhs(const Deformation& d, long w, long m, long n);
// Arity-n closure with the nested binomial bounds and power weights;
// normalization prefactor included.
GradedOperator n_algebra_rhs(const Deformation& d, long w,
                             const std::vector<long>& modes,
                             const std::vector<long>& ranks,
                             long* dropped = nullptr);

// Antisymmetrized bracket with the even-arity normalization and the
// eigenvalue factor at the given total mode attached.
GradedOperator paper_bracket(const Deformation& d,
                             const std::vector<GradedOperator>& ops,
                             long total_mode);

// ---- exact ladder decomposition ----

// Coefficients c_beta with op = sum_beta c_beta x^{beta+shift} D^beta,
// solved on sample modes and validated on the whole domain; nullopt when
// the operator leaves the ladder span.
std::optional<std::map<long, Rat>> ladder_solve(const Deformation& d,
                                                const GradedOperator& op,
                                                long shift, long beta_max);

// Proportionality a = scalar * b on the window overlap, scalar from the
// first nonzero entry of b; false with a witness when the shapes differ.
bool op_proportional(const GradedOperator& a, const GradedOperator& b, long lo,
                     long hi, Rat& scalar, std::string& witness);

// ---- central-extension scalars ----

// Pairing weight: eigenvalue x even-arity normalization x offset-1
// alternant at the given modes (arity = modes.size()).
Rat central_f(const Deformation& d, const std::vector<long>& modes);
// Antisymmetrized mode-pairing central value over 2n modes; `sixth`
// selects the 1/(6 2^n n!) normalization instead of 1/(12 2^n n!).
Rat central_C(const Deformation& d, const std::vector<long>& modes,
              const Rat& c, bool sixth);
// Single-mode example value: (c/12) p^m [m] / (q^m [2m]) [m-1][m][m+1].
Rat central_example(const Deformation& d, long m, const Rat& c);
// Pairing-compatibility residual over 4n-1 modes: antisymmetrized
// f(first 2n) x C(sum, last 2n-1).
Rat cocycle_residual(const Deformation& d, const std::vector<long>& modes,
                     int n, const Rat& c);

// ---- scalar structure functions of the leading-term displays ----

Rat structure_f4(const Deformation& d, const std::vector<long>& modes,
                 const std::vector<long>& ranks);
Rat structure_g5(const Deformation& d, const std::vector<long>& modes,
                 const std::vector<long>& ranks);

// Mode-independent contraction constant of the displayed closed form for
// the (2s-1)-fold bracket of rank-s generators.
Rat multibracket_constant(const Deformation& d, long s);

} // namespace rpq
