#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "goldbach/partitions.hpp"

namespace goldbach {

/// Length and size aggregates over one family of ordered pairs.
/// Averages are kept as the exact fraction total / pairs.
struct FamilyStats {
  std::uint64_t pairs = 0;     // number of ordered pairs in the family
  std::uint64_t min_length = 0;
  std::uint64_t max_length = 0;
  std::uint64_t largest = 0;   // E_max; 0 when every set is empty
  std::uint64_t distinct = 0;  // e: size of the union
  std::uint64_t total = 0;     // e~: size of the multiset union

  double average_length() const { return pairs == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(pairs); }

  friend bool operator==(const FamilyStats&, const FamilyStats&) = default;
};

/// One row of the per-modulus summary. `restricted` is the b = -a (mod m)
/// family (n a multiple of m); `all` ranges over every ordered pair.
struct ModulusSummary {
  std::uint64_t m = 0;
  FamilyStats restricted;
  FamilyStats all;

  friend bool operator==(const ModulusSummary&, const ModulusSummary&) = default;
};

struct EmptyPairCount {
  std::uint64_t m = 0;
  std::uint64_t empty_pairs = 0;  // z_m
  std::uint64_t total_pairs = 0;  // phi(m)^2

  double percent() const {
    return total_pairs == 0 ? 0.0 : 100.0 * static_cast<double>(empty_pairs) / static_cast<double>(total_pairs);
  }

  friend bool operator==(const EmptyPairCount&, const EmptyPairCount&) = default;
};

struct GrowthRow {
  std::uint64_t m = 0;
  std::uint64_t largest_exception = 0;
  std::uint64_t phi = 0;
  std::uint64_t eight_m2 = 0;
  std::uint64_t sixteen_m2 = 0;
  double two_m2_log_m = 0;
  double four_m2_log_m = 0;
};

using GrowthSeries = std::vector<GrowthRow>;

/// Throws ContractViolation naming the missing pairs when `sets` does not
/// hold every ordered admissible pair for m, or mixes search limits.
void require_complete(const ExceptionalSetMap& sets, std::uint64_t m);

ModulusSummary summarize_modulus(const ExceptionalSetMap& sets, std::uint64_t m);

EmptyPairCount count_empty_pairs(const ExceptionalSetMap& sets, std::uint64_t m);

/// Rows sorted by m are required; throws otherwise.
GrowthSeries growth_series(const std::vector<ModulusSummary>& summaries);

/// numerator/denominator rounded half away from zero to `decimals` places,
/// trailing zeros trimmed but at least one decimal kept ("2.0", "1.563").
std::string format_ratio(std::uint64_t numerator, std::uint64_t denominator, int decimals, bool trim);

/// CSV rows; column order matches the header functions.
std::string summary_csv_header();
std::string summary_csv_row(const ModulusSummary& s);
std::string empty_count_csv_header();
std::string empty_count_csv_row(const EmptyPairCount& c);
std::string growth_csv_header();
std::string growth_csv_row(const GrowthRow& r);

}  // namespace goldbach
