#include <iostream>

#include <CLI11.hpp>

#include "supercong/cli/commands.hpp"
#include "supercong/cli/report_json.hpp"
#include "supercong/cli/run_config.hpp"

using namespace supercong::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the A(pm) = A(m) mod p^4 supercongruence and its q-series ingredients"};
  app.set_version_flag("--version", std::string(kArtifactVersion));
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "human";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--jobs", cfg.jobs, "Worker threads");
    sub->add_option("--out", cfg.out, "Write the report here instead of stdout");
    sub->add_option("--format", format, "json, csv or human")->check(CLI::IsMember({"json", "csv", "human"}));
  };

  auto* fixed = app.add_subcommand("fixed-primes", "Six principal-part deltas for every prime in a range");
  fixed->add_option("--pmin", cfg.pmin, "Smallest prime (default 5)");
  fixed->add_option("--pmax", cfg.pmax, "Largest prime (default 499)");
  fixed->add_flag("--resume", cfg.resume, "Accepted for clarity; stored primes are always skipped");
  common(fixed);

  auto* window = app.add_subcommand("window", "A(pm) = A(m) mod p^4 over 5 <= p <= pmax, pm <= nmax");
  window->add_option("--pmax", cfg.pmax, "Largest prime (default 47)");
  window->add_option("--nmax", cfg.nmax, "Largest index pm (default 499)");
  common(window);

  auto* verify = app.add_subcommand("verify-all", "Run every check at its default parameters");
  verify->add_option("--profile", cfg.profile, "quick or default");
  common(verify);

  auto* series = app.add_subcommand("series", "Dump exact coefficients of t, H, C, L, Up, Theta, A or B");
  series->add_option("name,--name", cfg.series_name, "Series name");
  series->add_option("--terms", cfg.terms, "Number of coefficients (default 10)");
  series->add_option("--p", cfg.p, "Prime for Up");
  common(series);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  for (auto* sub : {fixed, window, verify, series})
    if (sub->parsed()) cfg.command = sub->get_name();
  try {
    cfg.format = parse_format(format);
    validate(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return run(cfg, std::cout, std::cerr);
}
