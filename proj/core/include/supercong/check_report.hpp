#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "supercong/exact_arith.hpp"

namespace supercong {

enum class CheckStatus { pass, fail, error };

std::string to_string(CheckStatus s);
CheckStatus parse_status(const std::string& s);

using WitnessValue = std::variant<ExactRational, Valuation>;

struct Witness {
  std::string label;
  WitnessValue value;

  bool operator==(const Witness&) const = default;
};

using ValuationMatrix = std::vector<std::vector<Valuation>>;

/// Outcome of one verification. Deterministic in its parameters.
struct CheckReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  CheckStatus status = CheckStatus::pass;
  std::vector<Witness> witnesses;
  std::optional<Valuation> min_valuation;
  std::optional<ValuationMatrix> matrix;
  std::vector<std::string> notes;

  bool passed() const { return status == CheckStatus::pass; }

  CheckReport& param(std::string key, std::string value);
  CheckReport& param(std::string key, long long value);
  CheckReport& witness(std::string label, WitnessValue value);
  /// Marks the report failed (an error status is kept) and records why.
  CheckReport& fail(std::string why);
  CheckReport& error(std::string why);
  CheckReport& note(std::string text);
  /// Lowers min_valuation to v if v is smaller.
  CheckReport& observe(const Valuation& v);

  const Witness* find_witness(const std::string& label) const;
  const std::string* find_param(const std::string& key) const;

  bool operator==(const CheckReport&) const = default;
};

}  // namespace supercong
