#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "rpq/deformation.hpp"

namespace rpq {

// Everything a check needs: one deformation at fixed parameters plus the
// shared grid caps. Checks clamp the grids further when an identity only
// makes sense (or stays affordable) on a smaller range.
struct CheckContext {
  const Deformation* d = nullptr;
  long window = 12;
  long mode_lo = -4, mode_hi = 4;
  long max_rank = 4;
  long arity_cap = 6;
  long t_order = 6; // both the derivative-index cap and the weight cap
  std::vector<long> toy_a{1, 2};
  std::vector<long> toy_gamma{0, 1};
  std::uint64_t seed = 42;
};

// One reported outcome. A check may emit several records (one per identity
// line or parameter block); params must be deterministic for sorting.
struct CheckRecord {
  std::string id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::string status; // "pass" | "fail" | "skipped"
  std::string witness;
  std::string note;
  long ms = 0;
};

using Sink = std::function<void(CheckRecord)>;
using CheckFn = void (*)(const CheckContext&, const Sink&);

// forced: must hold for every valid deformation (construction-level
// theorems); a failure means the engine is broken. Conformance entries
// compare independently computed objects against the catalog's reference
// formulas; deviations are first-class outcomes.
struct CheckInfo {
  const char* id;
  const char* topic;
  bool forced;
  CheckFn fn;
};

const std::vector<CheckInfo>& check_catalog();

// Deterministic per-check stream: FNV-1a of the id, xored with the seed.
std::mt19937_64 check_rng(const std::string& id, std::uint64_t seed);

} // namespace rpq
