#include "rpq/runner.hpp"

#include <chrono>

#include "rpq/errors.hpp"

namespace rpq {

Report run_suite(const RunConfig& cfg) {
  validate(cfg);
  const Deformation d = make_deformation(cfg);

  CheckContext ctx;
  ctx.d = &d;
  ctx.window = cfg.window;
  ctx.mode_lo = cfg.mode_lo;
  ctx.mode_hi = cfg.mode_hi;
  ctx.max_rank = cfg.max_rank;
  ctx.arity_cap = cfg.arity_cap;
  ctx.t_order = cfg.t_order;
  ctx.toy_a = cfg.toy_a;
  ctx.toy_gamma = cfg.toy_gamma;
  ctx.seed = cfg.seed;

  Report rep;
  rep.config = config_echo(cfg);

  for (const auto& info : check_catalog()) {
    if (cfg.suite == Suite::Forced && !info.forced) continue;
    if (cfg.suite == Suite::Conformance && info.forced) continue;

    std::vector<CheckRecord> batch;
    Sink sink = [&](CheckRecord rec) {
      rec.id = info.id;
      batch.push_back(std::move(rec));
    };
    const auto start = std::chrono::steady_clock::now();
    try {
      info.fn(ctx, sink);
    } catch (const Error& e) {
      // classified failure outside any record: the whole check is skipped
      CheckRecord rec;
      rec.id = info.id;
      rec.status = "skipped";
      rec.note = std::string(err_name(e.kind())) + ": " + e.what();
      batch.push_back(std::move(rec));
    }
    if (cfg.timings) {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      for (auto& rec : batch) rec.ms = ms;
    }
    for (auto& rec : batch) rep.checks.push_back(std::move(rec));
  }

  finalize_report(rep);
  return rep;
}

int report_exit_code(const Report& rep) {
  bool forced_failed = false, any_failed = false;
  for (const auto& rec : rep.checks) {
    if (rec.status != "fail") continue;
    any_failed = true;
    for (const auto& info : check_catalog())
      if (rec.id == info.id && info.forced) forced_failed = true;
  }
  if (forced_failed) return 1;
  if (any_failed) return 2;
  return 0;
}

} // namespace rpq
