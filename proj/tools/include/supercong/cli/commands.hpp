#pragma once

#include <iosfwd>

#include "supercong/cli/run_config.hpp"

namespace supercong::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsageError = 2 };

/// Runs a validated configuration. Results go to cfg.out (or `out` when it is
/// empty), diagnostics to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int cmd_fixed_primes(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_window(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify_all(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_series(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace supercong::cli
