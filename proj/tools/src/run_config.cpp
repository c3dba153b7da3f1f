#include "supercong/cli/run_config.hpp"

#include "supercong/cli/store.hpp"
#include "supercong/exact_arith.hpp"

namespace supercong::cli {

namespace {

const char* const kSeriesNames[] = {"t", "H", "C", "L", "Up", "Theta", "A", "B"};

bool known_series(const std::string& name) {
  for (const char* s : kSeriesNames)
    if (name == s) return true;
  return false;
}

}  // namespace

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "human") return OutputFormat::human;
  throw ConfigError("unknown format '" + s + "' (expected json, csv or human)");
}

void validate(RunConfig& cfg) {
  if (cfg.jobs == 0) throw ConfigError("--jobs must be at least 1");
  if (cfg.format == OutputFormat::csv && cfg.command != "fixed-primes")
    throw ConfigError("csv output is only available for fixed-primes");

  if (cfg.command == "fixed-primes") {
    if (!cfg.pmin) cfg.pmin = 5;
    if (!cfg.pmax) cfg.pmax = 499;
    if (*cfg.pmin < 5) throw ConfigError("--pmin must be >= 5");
    if (*cfg.pmax < *cfg.pmin) throw ConfigError("--pmax must be >= --pmin");
    bool any = false;
    for (std::uint64_t p = *cfg.pmin; p <= *cfg.pmax && !any; ++p) any = is_prime(p);
    if (!any) throw ConfigError("no primes in the requested range");
    if (cfg.store_path.empty()) cfg.store_path = default_store_path().string();
  } else if (cfg.command == "window") {
    if (!cfg.pmax) cfg.pmax = 47;
    if (!cfg.nmax) cfg.nmax = 499;
    if (*cfg.pmax < 5) throw ConfigError("--pmax must be >= 5: the window needs a prime >= 5");
    if (*cfg.nmax < 5) throw ConfigError("--nmax must be >= 5");
  } else if (cfg.command == "verify-all") {
    if (cfg.profile != "quick" && cfg.profile != "default")
      throw ConfigError("unknown profile '" + cfg.profile + "' (expected quick or default)");
  } else if (cfg.command == "series") {
    if (cfg.series_name.empty()) throw ConfigError("series needs a name: t, H, C, L, Up, Theta, A or B");
    if (!known_series(cfg.series_name)) throw ConfigError("unknown series '" + cfg.series_name + "'");
    if (!cfg.terms) cfg.terms = 10;
    if (*cfg.terms < 1) throw ConfigError("--terms must be >= 1");
    if (cfg.series_name == "Up") {
      if (!cfg.p) throw ConfigError("series Up needs --p");
      if (*cfg.p < 5 || !is_prime(*cfg.p)) throw ConfigError("--p must be a prime >= 5");
    }
  } else {
    throw ConfigError("unknown command '" + cfg.command + "'");
  }
}

}  // namespace supercong::cli
