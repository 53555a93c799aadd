#include "rpq/report.hpp"

#include <algorithm>
#include <sstream>

namespace rpq {

const std::vector<std::string>& convention_notes() {
  static const std::vector<std::string> notes{
      "Built-in kernels have eigenvalue 1 at every total mode; the zero-mode "
      "value is the limit. Custom tables have no zero-mode value, so affected "
      "records are skipped there.",
      "Cyclic exponent lists in arity-weighted right-hand sides are read by "
      "dropping indices that leave the operand range.",
      "Even-arity brackets carry the normalization (1/2)[-2M]/[-M] at total "
      "mode M exactly once; displayed lines are compared under that single "
      "attachment.",
      "Ratio-normalized multibracket identities are evaluated at zero total "
      "mode, where every power of the ratio collapses to 1 and the undisplayed "
      "exponent becomes irrelevant.",
      "The two power exponents missing from the summed-generator commutator "
      "display are taken as 0.",
      "Product-side branch functions substitute their scalar arguments "
      "directly.",
      "Derivative indices that leave the truncation window are dropped and "
      "counted; the counts appear in record notes.",
      "The degenerate branch of the branch-sum constraint operator is read as "
      "the zero-time limit.",
      "Expansion-route coefficients keep their complete weight polynomials in "
      "the rescaled times; the zero-time comparison isolates the constant "
      "parts.",
  };
  return notes;
}

void finalize_report(Report& rep) {
  std::stable_sort(rep.checks.begin(), rep.checks.end(),
                   [](const CheckRecord& a, const CheckRecord& b) {
                     if (a.id != b.id) return a.id < b.id;
                     return a.params.dump() < b.params.dump();
                   });
  rep.passed = rep.failed = rep.skipped = 0;
  for (const auto& rec : rep.checks) {
    if (rec.status == "pass")
      ++rep.passed;
    else if (rec.status == "fail")
      ++rep.failed;
    else
      ++rep.skipped;
  }
  rep.conventions = convention_notes();
}

nlohmann::ordered_json report_json(const Report& rep) {
  nlohmann::ordered_json j;
  j["config"] = rep.config;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& rec : rep.checks) {
    nlohmann::ordered_json r;
    r["id"] = rec.id;
    r["params"] = rec.params;
    r["status"] = rec.status;
    if (!rec.witness.empty()) r["witness"] = rec.witness;
    if (!rec.note.empty()) r["note"] = rec.note;
    r["ms"] = rec.ms;
    j["checks"].push_back(std::move(r));
  }
  j["summary"] = {{"pass", rep.passed}, {"fail", rep.failed}, {"skipped", rep.skipped}};
  j["conventions"] = rep.conventions;
  return j;
}

std::string emit_json(const Report& rep) { return report_json(rep).dump(2) + "\n"; }

namespace {

std::string md_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '|')
      out += "\\|";
    else if (c == '\n')
      out += ' ';
    else
      out += c;
  }
  return out;
}

} // namespace

std::string emit_markdown(const Report& rep) {
  std::ostringstream os;
  os << "# Verification report\n\n";
  os << "## Configuration\n\n";
  os << "| key | value |\n|---|---|\n";
  for (const auto& [key, value] : rep.config.items())
    os << "| " << key << " | "
       << md_escape(value.is_string() ? value.get<std::string>() : value.dump())
       << " |\n";
  os << "\n## Summary\n\n";
  os << rep.passed << " passed, " << rep.failed << " failed, " << rep.skipped
     << " skipped.\n";
  os << "\n## Checks\n\n";
  os << "| check | params | status | witness | note |\n|---|---|---|---|---|\n";
  for (const auto& rec : rep.checks)
    os << "| " << rec.id << " | " << md_escape(rec.params.dump()) << " | "
       << rec.status << " | " << md_escape(rec.witness) << " | "
       << md_escape(rec.note) << " |\n";
  os << "\n## Reading conventions\n\n";
  for (const auto& note : rep.conventions) os << "- " << note << "\n";
  return os.str();
}

} // namespace rpq
