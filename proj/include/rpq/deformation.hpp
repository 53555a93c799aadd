#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rpq/rational.hpp"

namespace rpq {

enum class FamilyKind {
  TwoParam, // [n] = (p^n - q^n)/(p - q)
  OneParam, // [n] = (1 - q^n)/(1 - q); p is fixed to 1 internally
  Custom,   // [n] = sum of r_{st} p^{ns} q^{nt} from a finite Laurent table
};

// Finite Laurent kernel R(u,v) = sum r_{st} u^s v^t with |s|,|t| <= bound.
struct CustomTable {
  long bound = 0;
  std::map<std::pair<long, long>, Rat> terms;
};

// One deformation family at fixed parameters. Construction validates
// 0 < q < p <= 1 (ParameterOrdering) and, for custom tables, R(1,1) = 0
// (NotNormalized). All evaluations are exact.
class Deformation {
public:
  static Deformation two_param(const Rat& p, const Rat& q);
  static Deformation one_param(const Rat& q);
  static Deformation custom(const Rat& p, const Rat& q, CustomTable table);

  FamilyKind kind() const { return kind_; }
  bool is_builtin() const { return kind_ != FamilyKind::Custom; }
  const Rat& p() const { return p_; }
  const Rat& q() const { return q_; }
  std::string family_name() const;

  // Kernel at arbitrary rational arguments.
  Rat R_at(const Rat& u, const Rat& v) const;

  // Deformed number [n] = R(p^n, q^n); defined for every integer n.
  Rat number(long n) const;

  // Two-parameter core (p^n - q^n)/(p - q); equals number() on built-ins.
  Rat number_core(long n) const;

  // Eigenvalue (p - q) [n] / (p^n - q^n). Identically 1 on built-ins
  // (including n = 0 as the limit); custom tables have no value at n = 0
  // (IndeterminateAtZero).
  Rat k_eigenvalue(long n) const;

  // [n]! with [0]! = 1; NegativeArgument for n < 0.
  Rat factorial(long n) const;

  // [n]!/([k]![n-k]!); requires 0 <= k <= n (IndexOrder otherwise).
  Rat binomial(long n, long k) const;

  // Same, but 0 outside 0 <= k <= n (structure-function convention).
  Rat binomial_or_zero(long n, long k) const;

  // [n][n-1]...[n-k+1]; empty product 1. Vanishes exactly when the factor
  // list crosses [0], i.e. when k > n >= 0; nonzero for n < 0.
  Rat falling(long n, long k) const;

  // Even-arity bracket normalization (1/2)([-2M]/[-M]); 1 for odd arity.
  // M = 0 gives the built-in limit 1; custom tables: IndeterminateAtZero.
  Rat bracket_prefactor(long total_mode, int arity) const;

  // Scale-a number: k(n) (p^{an} - q^{an})/(p^a - q^a), with value 0 at
  // n = 0. On built-ins this equals the closed form at (p^a, q^a).
  Rat number_scaled(long a, long n) const;

  // prod_{j<k} ([m_k + off] - [m_j + off]).
  Rat vandermonde(const std::vector<long>& modes, long offset) const;

private:
  Deformation(FamilyKind k, Rat p, Rat q, CustomTable t);

  FamilyKind kind_;
  Rat p_, q_;
  CustomTable table_;
};

// Loads {"l": int, "terms": [[s, t, "num/den"], ...]} from a JSON file.
CustomTable load_custom_table(const std::string& path);

} // namespace rpq
