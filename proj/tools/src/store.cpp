#include "supercong/cli/store.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "supercong/cli/report_json.hpp"

namespace supercong::cli {

namespace {

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

SweepStore SweepStore::load(const std::filesystem::path& path) {
  SweepStore store;
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return store;
  std::ifstream in(path);
  if (!in) throw StoreError("cannot open store " + path.string());
  try {
    const json doc = json::parse(in);
    store.updated_ = doc.value("updated", "");
    for (const auto& e : doc.at("entries")) {
      StoreEntry entry;
      entry.version = e.at("version").get<std::string>();
      entry.precision = e.at("precision").get<std::int64_t>();
      for (const auto& r : e.at("reports")) entry.reports.push_back(report_from_json(r));
      store.entries_[e.at("p").get<std::uint64_t>()] = std::move(entry);
    }
  } catch (const std::exception& ex) {
    throw StoreError("malformed store " + path.string() + ": " + ex.what());
  }
  return store;
}

void SweepStore::save(const std::filesystem::path& path) const {
  json doc;
  doc["version"] = kArtifactVersion;
  doc["updated"] = utc_now();
  doc["entries"] = json::array();
  for (const auto& [p, e] : entries_) {
    json ej;
    ej["p"] = p;
    ej["version"] = e.version;
    ej["precision"] = e.precision;
    ej["reports"] = json::array();
    for (const auto& r : e.reports) ej["reports"].push_back(report_to_json(r));
    doc["entries"].push_back(std::move(ej));
  }
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw StoreError("cannot write " + tmp.string());
    out << doc.dump(1) << "\n";
    if (!out) throw StoreError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw StoreError("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

bool SweepStore::has(std::uint64_t p, std::int64_t precision) const {
  const auto* e = find(p);
  return e && e->version == kArtifactVersion && e->precision >= precision;
}

const StoreEntry* SweepStore::find(std::uint64_t p) const {
  auto it = entries_.find(p);
  return it == entries_.end() ? nullptr : &it->second;
}

bool SweepStore::put(std::uint64_t p, StoreEntry entry) {
  auto it = entries_.find(p);
  if (it != entries_.end() && it->second.version == entry.version && it->second.precision >= entry.precision)
    return false;
  entries_[p] = std::move(entry);
  return true;
}

std::filesystem::path default_store_path() {
  if (const char* env = std::getenv("SUPERCONG_STORE"); env && *env) return env;
  return "supercong-store.json";
}

}  // namespace supercong::cli
