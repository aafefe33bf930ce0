#pragma once

#include "json.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "goldbach/partitions.hpp"

namespace goldbach {

inline constexpr int kCacheSchemaVersion = 1;

/// Environment variable consulted when no --cache-dir is given.
inline constexpr const char* kCacheDirEnv = "GOLDBACH_AP_CACHE_DIR";

/// On-disk form of one computed exceptional set. The checksum (FNV-1a 64 over
/// the canonical payload text) covers every other field.
struct CacheEntry {
  int schema_version = kCacheSchemaVersion;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t m = 0;
  std::uint64_t limit = 0;
  std::uint64_t stage1_bound = 0;
  std::vector<std::uint64_t> elements;
  std::uint64_t stage1_survivors = 0;
  std::vector<std::uint64_t> survivor_values;
  std::uint64_t checksum = 0;
};

std::uint64_t cache_checksum(const CacheEntry& entry);

CacheEntry make_cache_entry(const ExceptionalSet& set);
ExceptionalSet to_exceptional_set(const CacheEntry& entry);

nlohmann::json to_json(const CacheEntry& entry);
/// Throws nlohmann::json::exception on missing or mistyped fields.
CacheEntry cache_entry_from_json(const nlohmann::json& j);

/// Directory of per-pair entries keyed by (schema, m, a, b, N, M). A lookup for
/// N may be answered from an entry with a larger N' and the same M: marking in
/// stage 1 for n <= N only involves q <= N, so elements and survivors below N
/// are a prefix of the N' result.
class ResultCache {
 public:
  /// Creates the directory if needed; throws IoError when that fails.
  explicit ResultCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }

  /// Corrupt or unreadable entries are skipped and described in *warnings.
  /// Entries with another schema_version are ignored.
  std::optional<ExceptionalSet> load(const AdmissiblePair& pair, std::uint64_t limit, std::uint64_t stage1_bound,
                                     std::vector<std::string>* warnings = nullptr) const;

  /// Throws IoError on write failure.
  void store(const ExceptionalSet& set) const;

  std::filesystem::path entry_path(const AdmissiblePair& pair, std::uint64_t limit,
                                   std::uint64_t stage1_bound) const;

 private:
  std::optional<CacheEntry> read_entry(const std::filesystem::path& file, std::vector<std::string>* warnings) const;

  std::filesystem::path dir_;
};

}  // namespace goldbach
