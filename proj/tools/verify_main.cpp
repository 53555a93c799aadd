#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rpq/errors.hpp"
#include "rpq/runner.hpp"

namespace {

int run(int argc, char** argv) {
  CLI::App app{"Exact verification of the deformed operator-algebra displays"};

  std::string suite = "all", family = "pq", modes, format = "json", out;
  bool list_checks = false;
  rpq::RunConfig cfg;

  app.add_option("--suite", suite, "forced | conformance | all")
      ->check(CLI::IsMember({"forced", "conformance", "all"}));
  app.add_option("--family", family, "pq | q | custom:FILE");
  app.add_option("--p", cfg.p, "first parameter (rational, e.g. 2/3)");
  app.add_option("--q", cfg.q, "second parameter (rational, e.g. 1/5)");
  app.add_option("--window", cfg.window, "mode window half-width");
  app.add_option("--modes", modes, "sample mode range lo..hi");
  app.add_option("--max-rank", cfg.max_rank, "highest generator rank");
  app.add_option("--t-order", cfg.t_order, "time weight and derivative-index cap");
  app.add_option("--seed", cfg.seed, "seed for randomized property checks");
  app.add_option("--out", out, "write the report here instead of stdout");
  app.add_option("--format", format, "json | markdown | md")
      ->check(CLI::IsMember({"json", "markdown", "md"}));
  app.add_flag("--timings", cfg.timings, "record per-check wall time");
  app.add_flag("--list-checks", list_checks, "list catalog entries and exit");

  CLI11_PARSE(app, argc, argv);

  if (list_checks) {
    for (const auto& info : rpq::check_catalog())
      std::cout << info.id << " [" << (info.forced ? "forced" : "conformance")
                << "] " << info.topic << "\n";
    return 0;
  }

  if (suite == "forced")
    cfg.suite = rpq::Suite::Forced;
  else if (suite == "conformance")
    cfg.suite = rpq::Suite::Conformance;
  else
    cfg.suite = rpq::Suite::All;
  rpq::parse_family(family, cfg);
  if (!modes.empty()) rpq::parse_mode_range(modes, cfg);

  rpq::Report rep = rpq::run_suite(cfg);
  std::string text = format == "json" ? rpq::emit_json(rep) : rpq::emit_markdown(rep);

  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open output file: " << out << "\n";
      return 1;
    }
    f << text;
  }
  return rpq::report_exit_code(rep);
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const rpq::Error& e) {
    std::cerr << "error [" << rpq::err_name(e.kind()) << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
