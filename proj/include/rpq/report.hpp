#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rpq/checks.hpp"
#include "rpq/config.hpp"

namespace rpq {

struct Report {
  nlohmann::ordered_json config;
  std::vector<CheckRecord> checks; // sorted by (id, params dump)
  std::vector<std::string> conventions;

  long passed = 0, failed = 0, skipped = 0;
};

// Fixed reading notes attached to every report.
const std::vector<std::string>& convention_notes();

// Sorts records, fills the summary counters.
void finalize_report(Report& rep);

nlohmann::ordered_json report_json(const Report& rep);
std::string emit_json(const Report& rep);     // stable bytes
std::string emit_markdown(const Report& rep); // same data as tables

} // namespace rpq
