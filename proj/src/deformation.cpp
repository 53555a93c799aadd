#include "rpq/deformation.hpp"

#include <fstream>

#include <json.hpp>

#include "rpq/errors.hpp"

namespace rpq {

Deformation::Deformation(FamilyKind k, Rat p, Rat q, CustomTable t)
    : kind_(k), p_(std::move(p)), q_(std::move(q)), table_(std::move(t)) {
  if (!(q_ > 0 && q_ < p_ && p_ <= 1))
    fail(Err::ParameterOrdering,
         "need 0 < q < p <= 1, got p=" + rat_to_string(p_) + " q=" + rat_to_string(q_));
  if (kind_ == FamilyKind::Custom) {
    Rat at_one(0);
    for (const auto& [st, c] : table_.terms) at_one += c;
    if (at_one != 0) fail(Err::NotNormalized, "kernel table has R(1,1) != 0");
  }
}

Deformation Deformation::two_param(const Rat& p, const Rat& q) {
  return Deformation(FamilyKind::TwoParam, p, q, {});
}

Deformation Deformation::one_param(const Rat& q) {
  return Deformation(FamilyKind::OneParam, Rat(1), q, {});
}

Deformation Deformation::custom(const Rat& p, const Rat& q, CustomTable table) {
  return Deformation(FamilyKind::Custom, p, q, std::move(table));
}

std::string Deformation::family_name() const {
  switch (kind_) {
    case FamilyKind::TwoParam: return "pq";
    case FamilyKind::OneParam: return "q";
    case FamilyKind::Custom: return "custom";
  }
  return "?";
}

Rat Deformation::R_at(const Rat& u, const Rat& v) const {
  switch (kind_) {
    case FamilyKind::TwoParam: return (u - v) / (p_ - q_);
    case FamilyKind::OneParam: return (v - 1) / (q_ - 1);
    case FamilyKind::Custom: {
      Rat out(0);
      for (const auto& [st, c] : table_.terms)
        out += c * pow_rat(u, st.first) * pow_rat(v, st.second);
      return out;
    }
  }
  return Rat(0);
}

Rat Deformation::number(long n) const {
  return R_at(pow_rat(p_, n), pow_rat(q_, n));
}

Rat Deformation::number_core(long n) const {
  return (pow_rat(p_, n) - pow_rat(q_, n)) / (p_ - q_);
}

Rat Deformation::k_eigenvalue(long n) const {
  if (is_builtin()) return Rat(1);
  if (n == 0) fail(Err::IndeterminateAtZero, "eigenvalue limit at mode 0");
  return (p_ - q_) * number(n) / (pow_rat(p_, n) - pow_rat(q_, n));
}

Rat Deformation::factorial(long n) const {
  if (n < 0) fail(Err::NegativeArgument, "deformed factorial at " + std::to_string(n));
  Rat out(1);
  for (long i = 1; i <= n; ++i) out *= number(i);
  return out;
}

Rat Deformation::binomial(long n, long k) const {
  if (k < 0 || n < 0 || k > n)
    fail(Err::IndexOrder, "binomial (" + std::to_string(n) + "," + std::to_string(k) + ")");
  Rat out(1);
  for (long i = 1; i <= k; ++i) {
    Rat den = number(i);
    if (den == 0) fail(Err::DivisionByZeroMode, "binomial with vanishing [i]");
    out *= number(n - k + i) / den;
  }
  return out;
}

Rat Deformation::binomial_or_zero(long n, long k) const {
  if (k < 0 || n < 0 || k > n) return Rat(0);
  return binomial(n, k);
}

Rat Deformation::falling(long n, long k) const {
  if (k < 0) fail(Err::NegativeArgument, "falling factorial with k < 0");
  Rat out(1);
  for (long i = 0; i < k; ++i) out *= number(n - i);
  return out;
}

Rat Deformation::bracket_prefactor(long total_mode, int arity) const {
  if (arity % 2 != 0) return Rat(1);
  if (total_mode == 0) {
    if (!is_builtin()) fail(Err::IndeterminateAtZero, "prefactor limit at mode 0");
    return Rat(1); // limit of (p^{-M} + q^{-M})/2 at M = 0
  }
  Rat den = number(-total_mode);
  if (den == 0) fail(Err::DivisionByZeroMode, "prefactor with [-M] = 0");
  return number(-2 * total_mode) / den / 2;
}

Rat Deformation::number_scaled(long a, long n) const {
  if (n == 0) return Rat(0);
  Rat pa = pow_rat(p_, a), qa = pow_rat(q_, a);
  if (pa == qa) fail(Err::DivisionByZeroMode, "scaled number with p^a = q^a");
  return k_eigenvalue(n) * (pow_rat(pa, n) - pow_rat(qa, n)) / (pa - qa);
}

Rat Deformation::vandermonde(const std::vector<long>& modes, long offset) const {
  Rat out(1);
  for (size_t j = 0; j < modes.size(); ++j)
    for (size_t k = j + 1; k < modes.size(); ++k)
      out *= number(modes[k] + offset) - number(modes[j] + offset);
  return out;
}

CustomTable load_custom_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::ConfigInvalid, "cannot open kernel table " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(Err::ConfigInvalid, std::string("kernel table parse: ") + e.what());
  }
  if (!j.is_object() || !j.contains("l") || !j.contains("terms"))
    fail(Err::ConfigInvalid, "kernel table needs fields 'l' and 'terms'");
  CustomTable t;
  t.bound = j["l"].get<long>();
  if (t.bound < 0) fail(Err::ConfigInvalid, "negative Laurent bound");
  for (const auto& row : j["terms"]) {
    if (!row.is_array() || row.size() != 3)
      fail(Err::ConfigInvalid, "each term must be [s, t, coeff]");
    long s = row[0].get<long>(), tt = row[1].get<long>();
    if (s < -t.bound || s > t.bound || tt < -t.bound || tt > t.bound)
      fail(Err::UnsupportedExponent, "table exponent outside declared bound");
    t.terms[{s, tt}] += rat_from_string(row[2].get<std::string>());
  }
  return t;
}

} // namespace rpq
