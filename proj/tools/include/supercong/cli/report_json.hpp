#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "supercong/check_report.hpp"

namespace supercong::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kArtifactVersion = "1.0.0";

// Big integers and rationals travel as decimal strings; valuations as integers or "inf".
json valuation_to_json(const Valuation& v);
Valuation valuation_from_json(const json& j);

json report_to_json(const CheckReport& r);
CheckReport report_from_json(const json& j);

using ParamList = std::vector<std::pair<std::string, std::string>>;

/// {version, command, params, reports}
json make_document(const std::string& command, const ParamList& params, const std::vector<CheckReport>& reports);

}  // namespace supercong::cli
