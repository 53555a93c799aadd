#pragma once

#include <map>
#include <optional>
#include <vector>

#include "rpq/deformation.hpp"
#include "rpq/rational.hpp"

namespace rpq {

using ModeVec = std::vector<long>;

// Linear operator on the N-coordinate mode lattice, stored extensionally on
// the box [-w, w]^N; smin/smax bound target - mode per coordinate.
struct MultiOp {
  int N = 0;
  long lo = 0, hi = -1; // same bounds in every coordinate
  std::map<ModeVec, std::map<ModeVec, Rat>> act;
  ModeVec smin, smax;

  bool domain_empty() const { return lo > hi; }
};

MultiOp mop_zero(int N, long w);
MultiOp mop_identity(int N, long w);

void mop_insert(MultiOp& g, const ModeVec& mode, const ModeVec& target, const Rat& c);
void mop_finalize(MultiOp& g);

MultiOp mop_add(const MultiOp& a, const MultiOp& b);
MultiOp mop_sub(const MultiOp& a, const MultiOp& b);
MultiOp mop_scale(const MultiOp& a, const Rat& c);

// a applied after b; the valid box shrinks per coordinate.
MultiOp mop_compose(const MultiOp& a, const MultiOp& b);
MultiOp mop_commutator(const MultiOp& a, const MultiOp& b);

bool mop_is_zero(const MultiOp& a);

struct MopMismatch {
  ModeVec mode, target;
  Rat lhs, rhs;
};

// First difference on the shared box, smallest max-coordinate modes first.
std::optional<MopMismatch> mop_diff_witness(const MultiOp& a, const MultiOp& b);

// Fully antisymmetrized product over all permutations (no prefactor).
MultiOp mop_n_bracket(const std::vector<MultiOp>& ops);

// Proportionality a = scalar * b on the shared box, scalar from the first
// nonzero entry of b.
bool mop_proportional(const MultiOp& a, const MultiOp& b, Rat& scalar,
                      std::string& witness);

// ---- multi-coordinate generators ----

// Derivative in coordinate j (0-based): [n_j] on the mode ladder.
MultiOp mop_Dj(const Deformation& d, int N, long w, int j);

// Symmetrized product generator: global sign (-1)^{sum r}, one term per
// coordinate permutation, multiplication before derivatives coordinate-wise.
MultiOp make_Vbar(const Deformation& d, long w, const std::vector<long>& modes,
                  const std::vector<long>& ranks);

// Summed one-coordinate generator (-1)^r sum_j D_j^{r-1} x_j^{m+r-1}.
MultiOp make_Wbar(const Deformation& d, int N, long w, long m, long r);

// Displayed commutator right-hand side for two symmetrized generators;
// eigenvalue factor taken at the total mode sum.
MultiOp vbar_pair_rhs(const Deformation& d, long w, const std::vector<long>& m,
                      const std::vector<long>& r, const std::vector<long>& n,
                      const std::vector<long>& s);

// Displayed commutator right-hand side for two summed generators; the two
// undisplayed p-power exponents are taken as 0.
MultiOp wbar_pair_rhs(const Deformation& d, int N, long w, long m, long r,
                      long n, long s);

} // namespace rpq
