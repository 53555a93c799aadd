#include "rpq/config.hpp"

#include <charconv>

#include "rpq/errors.hpp"
#include "rpq/rational.hpp"

namespace rpq {

namespace {

long parse_long(const std::string& text, const std::string& what) {
  long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    fail(Err::ConfigInvalid, what + ": not an integer: '" + text + "'");
  return value;
}

} // namespace

void parse_family(const std::string& text, RunConfig& cfg) {
  if (text == "pq") {
    cfg.family = "pq";
    cfg.custom_path.clear();
    return;
  }
  if (text == "q") {
    cfg.family = "q";
    cfg.custom_path.clear();
    return;
  }
  if (text.rfind("custom:", 0) == 0) {
    std::string path = text.substr(7);
    if (path.empty())
      fail(Err::ConfigInvalid, "family custom: needs a table file path");
    cfg.family = "custom";
    cfg.custom_path = path;
    return;
  }
  fail(Err::ConfigInvalid, "family must be pq, q, or custom:PATH, got '" + text + "'");
}

void parse_mode_range(const std::string& text, RunConfig& cfg) {
  auto sep = text.find("..");
  if (sep == std::string::npos || sep == 0 || sep + 2 >= text.size())
    fail(Err::ConfigInvalid, "mode range must look like lo..hi, got '" + text + "'");
  cfg.mode_lo = parse_long(text.substr(0, sep), "mode range lower end");
  cfg.mode_hi = parse_long(text.substr(sep + 2), "mode range upper end");
}

void validate(const RunConfig& cfg) {
  if (cfg.family != "pq" && cfg.family != "q" && cfg.family != "custom")
    fail(Err::ConfigInvalid, "unknown family '" + cfg.family + "'");
  if (cfg.family == "custom" && cfg.custom_path.empty())
    fail(Err::ConfigInvalid, "custom family needs a table file path");
  if (cfg.window < 4 || cfg.window > 64)
    fail(Err::ConfigInvalid, "window must lie in [4, 64]");
  if (cfg.mode_lo > cfg.mode_hi)
    fail(Err::ConfigInvalid, "mode range is empty");
  if (cfg.mode_lo < -cfg.window || cfg.mode_hi > cfg.window)
    fail(Err::ConfigInvalid, "mode range exceeds the window");
  if (cfg.max_rank < 1 || cfg.max_rank > 6)
    fail(Err::ConfigInvalid, "max rank must lie in [1, 6]");
  if (cfg.arity_cap < 2 || cfg.arity_cap > 8)
    fail(Err::ConfigInvalid, "arity cap must lie in [2, 8]");
  if (cfg.t_order < 1 || cfg.t_order > 12)
    fail(Err::ConfigInvalid, "time order must lie in [1, 12]");
  if (cfg.toy_a.empty() || cfg.toy_gamma.empty())
    fail(Err::ConfigInvalid, "toy grids must be nonempty");
}

Deformation make_deformation(const RunConfig& cfg) {
  const Rat p = rat_from_string(cfg.p);
  const Rat q = rat_from_string(cfg.q);
  if (cfg.family == "pq") return Deformation::two_param(p, q);
  if (cfg.family == "q") return Deformation::one_param(q);
  return Deformation::custom(p, q, load_custom_table(cfg.custom_path));
}

nlohmann::ordered_json config_echo(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  switch (cfg.suite) {
    case Suite::Forced: j["suite"] = "forced"; break;
    case Suite::Conformance: j["suite"] = "conformance"; break;
    case Suite::All: j["suite"] = "all"; break;
  }
  j["family"] = cfg.family;
  if (cfg.family == "custom") j["table"] = cfg.custom_path;
  j["p"] = rat_to_string(rat_from_string(cfg.p));
  j["q"] = rat_to_string(rat_from_string(cfg.q));
  j["window"] = cfg.window;
  j["modes"] = std::to_string(cfg.mode_lo) + ".." + std::to_string(cfg.mode_hi);
  j["max_rank"] = cfg.max_rank;
  j["arity_cap"] = cfg.arity_cap;
  j["t_order"] = cfg.t_order;
  j["toy_a"] = cfg.toy_a;
  j["toy_gamma"] = cfg.toy_gamma;
  j["seed"] = cfg.seed;
  j["timings"] = cfg.timings;
  return j;
}

} // namespace rpq
