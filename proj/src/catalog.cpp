#include "rpq/checks.hpp"

#include "checks_util.hpp"

namespace rpq {

const std::vector<CheckInfo>& check_catalog() {
  using namespace checks;
  static const std::vector<CheckInfo> catalog{
      {"fock-relations", "ladder relations of the deformed oscillator triple",
       true, fock_relations},
      {"family-specialization",
       "one-parameter family equals the two-parameter family at p = 1", true,
       family_specialization},
      {"composition-associativity", "operator composition is associative", true,
       composition_associativity},
      {"bracket-antisymmetry",
       "alternating brackets flip sign under transpositions and vanish on repeats",
       true, bracket_antisymmetry},
      {"jacobi-gji",
       "pair Jacobi identity and the even-arity generalized Jacobi identity",
       true, jacobi_gji},
      {"gji-odd-arity-probe",
       "odd-arity generalized Jacobi residual exhibited nonzero", false,
       gji_odd_arity_probe},
      {"gji-paper-mode",
       "generalized Jacobi residual of the mode-weighted bracket", false,
       gji_paper_mode},
      {"nambu-form-equality",
       "left, right, and antisymmetrized forms of the triple bracket agree",
       true, nambu_form_equality},
      {"leibniz",
       "deformed product rule for derivative powers, both argument-scaling readings",
       false, leibniz},
      {"pair-commutator",
       "commutator of quadratic-realization generators against the displayed expansion",
       false, pair_commutator},
      {"pair-commutator-quadratic",
       "rank-2 commutator against the displayed quadratic combination", false,
       pair_commutator_quadratic},
      {"n-algebra",
       "arity-n bracket of quadratic-realization generators against the displayed closure",
       false, n_algebra},
      {"sub2n-closure",
       "2n-fold bracket of rank-(n+1) tower generators against the displayed alternant closure",
       false, sub2n_closure},
      {"central-cocycle",
       "central pairing values and the pairing-compatibility residual", false,
       central_cocycle},
      {"calw-commuting", "rank-1 tower generators commute", true, calw_commuting},
      {"calw-recursive-closed",
       "tower generators: recursion, closed expansion, and displayed rank-2 form",
       false, calw_recursive_closed},
      {"first-commutators-calw",
       "first displayed commutators of the derivative-power tower", false,
       first_commutators_calw},
      {"nambu-3algebra-calw",
       "triple brackets of rank-2 and rank-1 tower generators against the displayed 3-algebra",
       false, nambu_3algebra_calw},
      {"virasoro-witt-3algebra",
       "deformed Virasoro-Witt pair: 2-algebra, triple brackets, and rescaled variants",
       false, virasoro_witt_3algebra},
      {"4algebra-w3",
       "four-fold brackets of rank-3 tower generators against the displayed 4-algebra",
       false, four_algebra_w3},
      {"multibracket-ws",
       "(2s-1)-fold bracket of rank-s generators against the contraction constant at zero total mode",
       false, multibracket_ws},
      {"calw-2s-vanishing",
       "2s-fold bracket of rank-s tower generators vanishes", false,
       calw_2s_vanishing},
      {"nary-structure-leading",
       "leading ladder rank and coefficient of n-fold brackets", false,
       nary_structure_leading},
      {"bremner", "six-operand alternation identity for the triple bracket",
       false, bremner},
      {"filippov-probe",
       "fundamental identity residual of the triple bracket exhibited nonzero",
       false, filippov_probe},
      {"dj-commuting", "coordinate derivatives commute", true, dj_commuting},
      {"vbar-commutator",
       "commutator of symmetrized multi-coordinate generators against the displayed expansion",
       false, vbar_commutator},
      {"vbar-nbracket",
       "triple bracket of symmetrized generators closes onto one generator up to a scalar",
       false, vbar_nbracket},
      {"wbar-commutator",
       "commutator of summed one-coordinate generators against the displayed expansion",
       false, wbar_commutator},
      {"bell-oracle",
       "complete Bell polynomials: generating product against recursion, weight homogeneity",
       true, bell_oracle},
      {"det-property",
       "determinant operator multiplies the exponential kernel by the product of point powers",
       true, det_property},
      {"multi-index-det",
       "symmetrized multi-index operator: permutation sums and determinant reductions",
       true, multi_index_det},
      {"wtilde-specialization",
       "constraint operators: general branch sum against printed low-rank expansions",
       false, wtilde_specialization},
      {"theta-eval",
       "theta-style product: empty product, one-factor decomposition, unit arguments, pole",
       false, theta_eval_check},
      {"toy-duality-t0",
       "scale-a constraint routes agree at zero times up to the displayed sign",
       true, toy_duality_t0},
      {"toy-duality",
       "scale-a constraint operators: full proportionality of the two routes",
       false, toy_duality},
  };
  return catalog;
}

std::mt19937_64 check_rng(const std::string& id, std::uint64_t seed) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : id) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return std::mt19937_64(h ^ seed);
}

} // namespace rpq
