#include "rpq/laurent.hpp"

#include "rpq/errors.hpp"

namespace rpq {

namespace {
void check_deg(long window, long deg) {
  if (deg < -window || deg > window)
    fail(Err::WindowMismatch, "degree " + std::to_string(deg) + " outside window " +
                                  std::to_string(window));
}
void same_window(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.window != b.window) fail(Err::WindowMismatch, "window sizes differ");
}
} // namespace

LaurentPoly lp_zero(long window) { return LaurentPoly{window, {}}; }

LaurentPoly lp_monomial(long window, long deg, const Rat& c) {
  check_deg(window, deg);
  LaurentPoly p{window, {}};
  if (c != 0) p.coef[deg] = c;
  return p;
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) {
  same_window(a, b);
  LaurentPoly out = a;
  for (const auto& [d, c] : b.coef) {
    Rat& slot = out.coef[d];
    slot += c;
    if (slot == 0) out.coef.erase(d);
  }
  return out;
}

LaurentPoly lp_sub(const LaurentPoly& a, const LaurentPoly& b) {
  return lp_add(a, lp_scale(b, Rat(-1)));
}

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) {
  same_window(a, b);
  LaurentPoly out{a.window, {}};
  for (const auto& [da, ca] : a.coef)
    for (const auto& [db, cb] : b.coef) {
      long d = da + db;
      check_deg(a.window, d);
      Rat& slot = out.coef[d];
      slot += ca * cb;
      if (slot == 0) out.coef.erase(d);
    }
  return out;
}

LaurentPoly lp_scale(const LaurentPoly& a, const Rat& c) {
  LaurentPoly out{a.window, {}};
  if (c == 0) return out;
  for (const auto& [d, v] : a.coef) out.coef[d] = v * c;
  return out;
}

LaurentPoly lp_scale_arg(const LaurentPoly& a, const Rat& s) {
  LaurentPoly out{a.window, {}};
  for (const auto& [d, v] : a.coef) {
    Rat c = v * pow_rat(s, d);
    if (c != 0) out.coef[d] = c;
  }
  return out;
}

bool lp_equal(const LaurentPoly& a, const LaurentPoly& b) {
  same_window(a, b);
  return a.coef == b.coef;
}

} // namespace rpq
