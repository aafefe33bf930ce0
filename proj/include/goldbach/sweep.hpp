#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "goldbach/cache.hpp"
#include "goldbach/partitions.hpp"
#include "goldbach/primes.hpp"

namespace goldbach {

struct SweepOptions {
  std::uint64_t limit = 10'000'000;
  SearchConfig search;
  std::optional<std::filesystem::path> cache_dir;
};

/// Per-modulus driver shared by the table and figure commands: one prime
/// table for the whole sweep, an optional result cache, and a worker pool
/// over unordered pairs. Results do not depend on thread count or on which
/// entries were cached.
class ModulusSweep {
 public:
  /// Throws IoError when the cache directory cannot be created.
  explicit ModulusSweep(SweepOptions options);

  const SweepOptions& options() const { return options_; }

  /// Sieved lazily on first use.
  const PrimeTable& table();

  /// Every ordered pair for m, from cache where valid, computed otherwise.
  /// New results are written back when a cache is configured.
  ExceptionalSetMap sets_for(std::uint64_t m);

  /// Only what the cache already holds; nullopt unless every pair is present.
  std::optional<ExceptionalSetMap> cached_sets_for(std::uint64_t m);

  /// Cache problems seen so far (corrupt entries etc.), in encounter order.
  const std::vector<std::string>& warnings() const { return warnings_; }

  std::uint64_t computed_pairs() const { return computed_pairs_; }
  std::uint64_t cached_pairs() const { return cached_pairs_; }

 private:
  SweepOptions options_;
  std::optional<ResultCache> cache_;
  std::unique_ptr<PrimeTable> table_;
  std::vector<std::string> warnings_;
  std::uint64_t computed_pairs_ = 0;
  std::uint64_t cached_pairs_ = 0;
};

}  // namespace goldbach
