#include "goldbach/cache.hpp"

#include <fmt/format.h>

#include <fstream>
#include <sstream>
#include <system_error>

#include "goldbach/errors.hpp"

namespace goldbach {

namespace fs = std::filesystem;

namespace {

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void append_list(std::string& out, const std::vector<std::uint64_t>& values) {
  out += '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  out += ']';
}

std::string key_prefix(const AdmissiblePair& pair, std::uint64_t stage1_bound) {
  return fmt::format("m{}_a{}_b{}_M{}_N", pair.m(), pair.a(), pair.b(), stage1_bound);
}

}  // namespace

std::uint64_t cache_checksum(const CacheEntry& e) {
  std::string payload = fmt::format("v{};a{};b{};m{};N{};M{};s{};", e.schema_version, e.a, e.b, e.m, e.limit,
                                    e.stage1_bound, e.stage1_survivors);
  append_list(payload, e.elements);
  payload += ';';
  append_list(payload, e.survivor_values);
  return fnv1a(payload);
}

CacheEntry make_cache_entry(const ExceptionalSet& set) {
  CacheEntry e;
  e.a = set.pair.a();
  e.b = set.pair.b();
  e.m = set.pair.m();
  e.limit = set.search_limit;
  e.stage1_bound = set.stage1_bound;
  e.elements = set.elements;
  e.stage1_survivors = set.stage1_survivors;
  e.survivor_values = set.survivor_values;
  e.checksum = cache_checksum(e);
  return e;
}

ExceptionalSet to_exceptional_set(const CacheEntry& e) {
  return ExceptionalSet{AdmissiblePair(e.a, e.b, e.m), e.limit, e.stage1_bound, e.elements, e.stage1_survivors,
                        e.survivor_values, true};
}

nlohmann::json to_json(const CacheEntry& e) {
  return nlohmann::json{{"schema_version", e.schema_version},
                        {"a", e.a},
                        {"b", e.b},
                        {"m", e.m},
                        {"N", e.limit},
                        {"M", e.stage1_bound},
                        {"elements", e.elements},
                        {"stage1_survivors", e.stage1_survivors},
                        {"survivor_values", e.survivor_values},
                        // hex string: JSON readers outside C++ often lose 64-bit integers
                        {"checksum", fmt::format("{:016x}", e.checksum)}};
}

CacheEntry cache_entry_from_json(const nlohmann::json& j) {
  CacheEntry e;
  e.schema_version = j.at("schema_version").get<int>();
  e.a = j.at("a").get<std::uint64_t>();
  e.b = j.at("b").get<std::uint64_t>();
  e.m = j.at("m").get<std::uint64_t>();
  e.limit = j.at("N").get<std::uint64_t>();
  e.stage1_bound = j.at("M").get<std::uint64_t>();
  e.elements = j.at("elements").get<std::vector<std::uint64_t>>();
  e.stage1_survivors = j.at("stage1_survivors").get<std::uint64_t>();
  e.survivor_values = j.at("survivor_values").get<std::vector<std::uint64_t>>();
  e.checksum = std::stoull(j.at("checksum").get<std::string>(), nullptr, 16);
  return e;
}

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec || !fs::is_directory(dir_)) {
    throw IoError(fmt::format("cannot use cache directory '{}': {}", dir_.string(),
                              ec ? ec.message() : "not a directory"));
  }
}

fs::path ResultCache::entry_path(const AdmissiblePair& pair, std::uint64_t limit, std::uint64_t stage1_bound) const {
  return dir_ / (key_prefix(pair, stage1_bound) + std::to_string(limit) + ".json");
}

std::optional<CacheEntry> ResultCache::read_entry(const fs::path& file, std::vector<std::string>* warnings) const {
  auto warn = [&](const std::string& msg) {
    if (warnings) warnings->push_back(fmt::format("cache entry {}: {}", file.string(), msg));
  };
  std::ifstream in(file);
  if (!in) {
    warn("unreadable");
    return std::nullopt;
  }
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("schema_version").get<int>() != kCacheSchemaVersion) return std::nullopt;
    CacheEntry e = cache_entry_from_json(j);
    if (cache_checksum(e) != e.checksum) {
      warn("checksum mismatch, recomputing");
      return std::nullopt;
    }
    return e;
  } catch (const std::exception& ex) {
    warn(std::string("corrupt (") + ex.what() + "), recomputing");
    return std::nullopt;
  }
}

std::optional<ExceptionalSet> ResultCache::load(const AdmissiblePair& pair, std::uint64_t limit,
                                                std::uint64_t stage1_bound, std::vector<std::string>* warnings) const {
  const fs::path exact = entry_path(pair, limit, stage1_bound);
  if (fs::exists(exact)) {
    if (auto e = read_entry(exact, warnings)) {
      if (e->a == pair.a() && e->b == pair.b() && e->m == pair.m() && e->limit == limit &&
          e->stage1_bound == stage1_bound) {
        return to_exceptional_set(*e);
      }
    }
  }

  // prefix reuse from the smallest larger N
  const std::string prefix = key_prefix(pair, stage1_bound);
  std::optional<std::uint64_t> best;
  std::error_code ec;
  for (const auto& item : fs::directory_iterator(dir_, ec)) {
    const std::string name = item.path().filename().string();
    if (name.rfind(prefix, 0) != 0 || item.path().extension() != ".json") continue;
    const std::string digits = name.substr(prefix.size(), name.size() - prefix.size() - 5);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) continue;
    const std::uint64_t other = std::stoull(digits);
    if (other > limit && (!best || other < *best)) best = other;
  }
  if (!best) return std::nullopt;
  auto e = read_entry(entry_path(pair, *best, stage1_bound), warnings);
  if (!e || e->a != pair.a() || e->b != pair.b() || e->m != pair.m() || e->stage1_bound != stage1_bound) {
    return std::nullopt;
  }
  ExceptionalSet set = to_exceptional_set(*e);
  set.search_limit = limit;
  std::erase_if(set.elements, [&](std::uint64_t n) { return n > limit; });
  std::erase_if(set.survivor_values, [&](std::uint64_t n) { return n > limit; });
  set.stage1_survivors = set.survivor_values.size();
  return set;
}

void ResultCache::store(const ExceptionalSet& set) const {
  const fs::path file = entry_path(set.pair, set.search_limit, set.stage1_bound);
  const fs::path tmp = fs::path(file.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError(fmt::format("cannot write cache entry '{}'", tmp.string()));
    out << to_json(make_cache_entry(set)).dump() << '\n';
    if (!out) throw IoError(fmt::format("failed writing cache entry '{}'", tmp.string()));
  }
  std::error_code ec;
  fs::rename(tmp, file, ec);
  if (ec) throw IoError(fmt::format("cannot move cache entry into place '{}': {}", file.string(), ec.message()));
}

}  // namespace goldbach
