#pragma once

#include <map>

#include "rpq/rational.hpp"

namespace rpq {

// Sparse Laurent polynomial with a hard support window [-window, window].
// Operations are exact; a product escaping the window is an error, never a
// silent truncation.
struct LaurentPoly {
  long window = 0;
  std::map<long, Rat> coef; // degree -> coefficient; zeros erased
};

LaurentPoly lp_zero(long window);
LaurentPoly lp_monomial(long window, long deg, const Rat& c);
LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b); // WindowMismatch if windows differ
LaurentPoly lp_sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b); // WindowMismatch if result escapes
LaurentPoly lp_scale(const LaurentPoly& a, const Rat& c);
LaurentPoly lp_scale_arg(const LaurentPoly& a, const Rat& s); // x -> s x
bool lp_equal(const LaurentPoly& a, const LaurentPoly& b);

} // namespace rpq
