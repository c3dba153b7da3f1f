#include "supercong/cli/report_json.hpp"

#include <stdexcept>

namespace supercong::cli {

json valuation_to_json(const Valuation& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

Valuation valuation_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") throw std::invalid_argument("bad valuation: " + j.dump());
    return Valuation::infinity();
  }
  return Valuation(j.get<std::int64_t>());
}

json report_to_json(const CheckReport& r) {
  json j;
  j["name"] = r.name;
  j["params"] = json::array();
  for (const auto& [k, v] : r.params) j["params"].push_back({k, v});
  j["status"] = to_string(r.status);
  j["witnesses"] = json::array();
  for (const auto& w : r.witnesses) {
    json wj;
    wj["label"] = w.label;
    if (const auto* x = std::get_if<ExactRational>(&w.value)) {
      wj["kind"] = "rational";
      wj["value"] = to_string(*x);
    } else {
      wj["kind"] = "valuation";
      wj["value"] = valuation_to_json(std::get<Valuation>(w.value));
    }
    j["witnesses"].push_back(std::move(wj));
  }
  j["min_valuation"] = r.min_valuation ? valuation_to_json(*r.min_valuation) : json(nullptr);
  if (r.matrix) {
    json m = json::array();
    for (const auto& row : *r.matrix) {
      json rj = json::array();
      for (const auto& v : row) rj.push_back(valuation_to_json(v));
      m.push_back(std::move(rj));
    }
    j["matrix"] = std::move(m);
  } else {
    j["matrix"] = nullptr;
  }
  j["notes"] = r.notes;
  return j;
}

CheckReport report_from_json(const json& j) {
  CheckReport r;
  r.name = j.at("name").get<std::string>();
  for (const auto& p : j.at("params")) r.params.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
  r.status = parse_status(j.at("status").get<std::string>());
  for (const auto& wj : j.at("witnesses")) {
    const auto kind = wj.at("kind").get<std::string>();
    if (kind == "rational")
      r.witnesses.push_back({wj.at("label").get<std::string>(), parse_rational(wj.at("value").get<std::string>())});
    else if (kind == "valuation")
      r.witnesses.push_back({wj.at("label").get<std::string>(), valuation_from_json(wj.at("value"))});
    else
      throw std::invalid_argument("unknown witness kind " + kind);
  }
  if (!j.at("min_valuation").is_null()) r.min_valuation = valuation_from_json(j.at("min_valuation"));
  if (!j.at("matrix").is_null()) {
    ValuationMatrix m;
    for (const auto& row : j.at("matrix")) {
      std::vector<Valuation> out;
      for (const auto& v : row) out.push_back(valuation_from_json(v));
      m.push_back(std::move(out));
    }
    r.matrix = std::move(m);
  }
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

json make_document(const std::string& command, const ParamList& params, const std::vector<CheckReport>& reports) {
  json doc;
  doc["version"] = kArtifactVersion;
  doc["command"] = command;
  doc["params"] = json::object();
  for (const auto& [k, v] : params) doc["params"][k] = v;
  doc["reports"] = json::array();
  for (const auto& r : reports) doc["reports"].push_back(report_to_json(r));
  return doc;
}

}  // namespace supercong::cli
