#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace supercong::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { json, csv, human };

OutputFormat parse_format(const std::string& s);

struct RunConfig {
  std::string command;  // fixed-primes | window | verify-all | series
  std::optional<std::uint64_t> pmin;
  std::optional<std::uint64_t> pmax;
  std::optional<std::uint64_t> p;
  std::optional<std::int64_t> nmax;
  std::optional<std::int64_t> terms;
  unsigned jobs = 1;
  std::string out;  // empty: standard output
  OutputFormat format = OutputFormat::human;
  bool resume = false;
  std::string profile = "default";  // verify-all: quick | default
  std::string series_name;
  std::string store_path;  // resolved by validate() for fixed-primes
};

/// Fills per-command defaults and rejects inconsistent settings with ConfigError.
void validate(RunConfig& cfg);

}  // namespace supercong::cli
