#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "supercong/check_report.hpp"

namespace supercong::cli {

class StoreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StoreEntry {
  std::string version;
  std::int64_t precision = 0;
  std::vector<CheckReport> reports;

  bool operator==(const StoreEntry&) const = default;
};

/// File-backed map prime -> reports. The file is one JSON document whose
/// entries are sorted by prime; save() writes a temporary file and renames it.
class SweepStore {
 public:
  /// A missing file yields an empty store; an unreadable or malformed one throws StoreError.
  static SweepStore load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  /// True if p is stored by this artifact version at precision >= precision.
  bool has(std::uint64_t p, std::int64_t precision) const;
  const StoreEntry* find(std::uint64_t p) const;
  /// Inserts, or replaces an entry with lower precision or a different version.
  /// Returns false (and keeps the old entry) otherwise.
  bool put(std::uint64_t p, StoreEntry entry);

  const std::map<std::uint64_t, StoreEntry>& entries() const { return entries_; }
  const std::string& updated() const { return updated_; }

  /// Compares entries only; the timestamp is not logical content.
  bool same_content(const SweepStore& other) const { return entries_ == other.entries_; }

 private:
  std::map<std::uint64_t, StoreEntry> entries_;
  std::string updated_;
};

/// SUPERCONG_STORE if set, else ./supercong-store.json.
std::filesystem::path default_store_path();

}  // namespace supercong::cli
