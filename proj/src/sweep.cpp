#include "goldbach/sweep.hpp"

#include <utility>

namespace goldbach {

namespace {

std::vector<AdmissiblePair> unordered_pairs(std::uint64_t m) {
  const auto units = unit_residues(m);
  std::vector<AdmissiblePair> out;
  for (std::size_t i = 0; i < units.size(); ++i) {
    for (std::size_t j = i; j < units.size(); ++j) out.emplace_back(units[i], units[j], m);
  }
  return out;
}

void insert_with_mirror(ExceptionalSetMap& out, ExceptionalSet set) {
  if (set.pair.a() != set.pair.b()) {
    ExceptionalSet mirror = set;
    mirror.pair = set.pair.swapped();
    out.emplace(mirror.pair, std::move(mirror));
  }
  out.emplace(set.pair, std::move(set));
}

}  // namespace

ModulusSweep::ModulusSweep(SweepOptions options) : options_(std::move(options)) {
  if (options_.limit < 2) throw ContractViolation("sweep limit N must be >= 2");
  if (options_.cache_dir) cache_.emplace(*options_.cache_dir);
}

const PrimeTable& ModulusSweep::table() {
  if (!table_) table_ = std::make_unique<PrimeTable>(sieve_primes(options_.limit));
  return *table_;
}

ExceptionalSetMap ModulusSweep::sets_for(std::uint64_t m) {
  require_even_modulus(m);
  const std::uint64_t limit = options_.limit;
  const std::uint64_t bound = resolve_stage1_bound(m, limit, options_.search);
  const auto pairs = unordered_pairs(m);

  std::vector<std::optional<ExceptionalSet>> results(pairs.size());
  std::vector<std::size_t> missing;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (cache_) results[i] = cache_->load(pairs[i], limit, bound, &warnings_);
    if (results[i]) {
      ++cached_pairs_;
    } else {
      missing.push_back(i);
    }
  }

  if (!missing.empty()) {
    const PrimeTable& primes = table();
    parallel_for(missing.size(), options_.search.threads, [&](std::size_t k) {
      const std::size_t i = missing[k];
      results[i] = exceptional_set(primes, pairs[i], limit, options_.search);
    });
    computed_pairs_ += missing.size();
    if (cache_) {
      for (std::size_t i : missing) cache_->store(*results[i]);
    }
  }

  ExceptionalSetMap out;
  for (auto& r : results) insert_with_mirror(out, std::move(*r));
  return out;
}

std::optional<ExceptionalSetMap> ModulusSweep::cached_sets_for(std::uint64_t m) {
  require_even_modulus(m);
  if (!cache_) return std::nullopt;
  const std::uint64_t bound = resolve_stage1_bound(m, options_.limit, options_.search);
  ExceptionalSetMap out;
  for (const auto& pair : unordered_pairs(m)) {
    auto set = cache_->load(pair, options_.limit, bound, &warnings_);
    if (!set) return std::nullopt;
    insert_with_mirror(out, std::move(*set));
  }
  return out;
}

}  // namespace goldbach
