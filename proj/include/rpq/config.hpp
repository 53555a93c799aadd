#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "rpq/deformation.hpp"

namespace rpq {

enum class Suite { Forced, Conformance, All };

struct RunConfig {
  Suite suite = Suite::All;
  std::string family = "pq"; // "pq" | "q" | "custom"
  std::string custom_path;   // table file when family == "custom"
  std::string p = "2/3";
  std::string q = "1/5";
  long window = 12;
  long mode_lo = -4, mode_hi = 4;
  long max_rank = 4;
  long arity_cap = 6;
  long t_order = 6;
  std::vector<long> toy_a{1, 2};
  std::vector<long> toy_gamma{0, 1};
  std::uint64_t seed = 42;
  bool timings = false;
};

// "pq", "q", or "custom:PATH" (ConfigInvalid otherwise).
void parse_family(const std::string& text, RunConfig& cfg);

// "lo..hi" with optional signs (ConfigInvalid otherwise).
void parse_mode_range(const std::string& text, RunConfig& cfg);

// Range and ordering checks; builds nothing.
void validate(const RunConfig& cfg);

// Instantiates the deformation (reads the table file for custom families).
Deformation make_deformation(const RunConfig& cfg);

// Deterministic echo for the report header.
nlohmann::ordered_json config_echo(const RunConfig& cfg);

} // namespace rpq
