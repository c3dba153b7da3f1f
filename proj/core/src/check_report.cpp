#include "supercong/check_report.hpp"

#include <stdexcept>

namespace supercong {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::error: return "error";
  }
  return "error";
}

CheckStatus parse_status(const std::string& s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "error") return CheckStatus::error;
  throw std::invalid_argument("unknown check status: " + s);
}

CheckReport& CheckReport::param(std::string key, std::string value) {
  params.emplace_back(std::move(key), std::move(value));
  return *this;
}

CheckReport& CheckReport::param(std::string key, long long value) {
  return param(std::move(key), std::to_string(value));
}

CheckReport& CheckReport::witness(std::string label, WitnessValue value) {
  witnesses.push_back({std::move(label), std::move(value)});
  return *this;
}

CheckReport& CheckReport::fail(std::string why) {
  if (status == CheckStatus::pass) status = CheckStatus::fail;
  notes.push_back(std::move(why));
  return *this;
}

CheckReport& CheckReport::error(std::string why) {
  status = CheckStatus::error;
  notes.push_back(std::move(why));
  return *this;
}

CheckReport& CheckReport::note(std::string text) {
  notes.push_back(std::move(text));
  return *this;
}

CheckReport& CheckReport::observe(const Valuation& v) {
  if (!min_valuation || v < *min_valuation) min_valuation = v;
  return *this;
}

const Witness* CheckReport::find_witness(const std::string& label) const {
  for (const auto& w : witnesses)
    if (w.label == label) return &w;
  return nullptr;
}

const std::string* CheckReport::find_param(const std::string& key) const {
  for (const auto& [k, v] : params)
    if (k == key) return &v;
  return nullptr;
}

}  // namespace supercong
