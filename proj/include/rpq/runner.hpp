#pragma once

#include "rpq/report.hpp"

namespace rpq {

// Runs the selected suite single-threaded in catalog order. Classified
// engine errors inside a check become skipped records; anything else
// propagates (engine failure, exit code 1 at the CLI).
Report run_suite(const RunConfig& cfg);

// 0: nothing failed; 1: a forced check failed; 2: conformance-only failures.
int report_exit_code(const Report& rep);

} // namespace rpq
