#pragma once

#include <map>
#include <optional>
#include <random>
#include <vector>

#include "rpq/laurent.hpp"
#include "rpq/rational.hpp"

namespace rpq {

// Linear operator on the mode basis, stored extensionally: for every mode n
// in the valid domain [lo, hi], the full list of (target, coefficient) pairs.
// Composition shrinks the domain so that every intermediate action is known
// exactly; smin/smax bound target - mode over all stored entries.
struct GradedOperator {
  long lo = 0, hi = -1; // empty when lo > hi
  std::map<long, std::map<long, Rat>> act;
  long smin = 0, smax = 0;

  bool domain_empty() const { return lo > hi; }
};

GradedOperator op_zero(long lo, long hi);
GradedOperator op_identity(long lo, long hi);

// Accumulates one matrix element; call op_finalize once after inserting.
void op_insert(GradedOperator& g, long mode, long target, const Rat& c);
void op_finalize(GradedOperator& g); // drops zeros, recomputes shift bounds

GradedOperator op_add(const GradedOperator& a, const GradedOperator& b);
GradedOperator op_sub(const GradedOperator& a, const GradedOperator& b);
GradedOperator op_scale(const GradedOperator& a, const Rat& c);

// a applied after b. Valid domain: modes where b's targets all land inside
// a's domain. WindowExhausted when that window is empty.
GradedOperator op_compose(const GradedOperator& a, const GradedOperator& b);

GradedOperator op_commutator(const GradedOperator& a, const GradedOperator& b);

// Narrows the domain to [lo, hi]; WindowExhausted if that exceeds the domain.
GradedOperator op_restrict(const GradedOperator& a, long lo, long hi);

bool op_is_zero(const GradedOperator& a);

struct OpMismatch {
  long mode = 0, target = 0;
  Rat lhs, rhs;
};

// First difference between a and b on the overlap of their domains with
// [lo, hi], smallest |mode| first. WindowExhausted if the overlap is empty.
std::optional<OpMismatch> op_diff_witness(const GradedOperator& a, const GradedOperator& b,
                                          long lo, long hi);

// Applies to a polynomial whose support lies inside the operator domain.
LaurentPoly op_apply(const GradedOperator& g, const LaurentPoly& f);

// Fully antisymmetrized product over all permutations (no prefactor).
GradedOperator n_bracket(const std::vector<GradedOperator>& ops);

// Generalized Jacobi residual for the plain arity-n bracket, in combination
// form: sum over |S| = n subsets of the 2n-1 operands, with the interleave
// sign, of [[S-bracket], rest]. Vanishes iff the fully antisymmetrized form
// does.
GradedOperator gji_residual(const std::vector<GradedOperator>& ops, int arity);

// Sign of the permutation taking (0..n-1) to perm.
int perm_sign(const std::vector<int>& perm);

// Deterministic banded random operator for property tests.
GradedOperator random_banded(std::mt19937_64& rng, long lo, long hi, long band);

} // namespace rpq
