#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "goldbach/errors.hpp"
#include "goldbach/primes.hpp"

namespace goldbach {

/// A triple (a, b, m) with m even and a, b canonical units mod m.
/// Construction validates; an existing AdmissiblePair is always admissible.
class AdmissiblePair {
 public:
  AdmissiblePair(std::uint64_t a, std::uint64_t b, std::uint64_t m);

  std::uint64_t a() const { return a_; }
  std::uint64_t b() const { return b_; }
  std::uint64_t m() const { return m_; }

  AdmissiblePair swapped() const { return AdmissiblePair(b_, a_, m_); }

  /// Smallest n >= 2 with n = a + b (mod m). Every n in the class is even.
  std::uint64_t first_candidate() const;

  std::string to_string() const;

  friend auto operator<=>(const AdmissiblePair&, const AdmissiblePair&) = default;

 private:
  std::uint64_t a_;
  std::uint64_t b_;
  std::uint64_t m_;
};

struct PartitionWitness {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  std::uint64_t q = 0;

  friend bool operator==(const PartitionWitness&, const PartitionWitness&) = default;
};

struct ExceptionalSet {
  AdmissiblePair pair;
  std::uint64_t search_limit = 0;  // N, inclusive
  std::uint64_t stage1_bound = 0;  // M
  std::vector<std::uint64_t> elements;
  // Candidates left unmarked by stage 1 that stage 2 showed representable.
  std::uint64_t stage1_survivors = 0;
  std::vector<std::uint64_t> survivor_values;
  bool confirmed = true;
};

struct SearchConfig {
  /// Stage-1 bound M; when unset, default_stage1_bound(m) clamped to N.
  std::optional<std::uint64_t> stage1_bound;
  /// Worker threads for per-modulus sweeps (0 = hardware concurrency).
  unsigned threads = 1;
};

/// max(10^4, ceil(50 m (ln max(m, 3))^2)).
std::uint64_t default_stage1_bound(std::uint64_t m);

/// Stage-1 bound actually used for (m, N) under config.
std::uint64_t resolve_stage1_bound(std::uint64_t m, std::uint64_t limit, const SearchConfig& config);

template <typename Oracle>
concept PrimalityOracle = std::predicate<const Oracle&, std::uint64_t>;

namespace detail {
void check_witness_request(std::uint64_t n, const AdmissiblePair& pair);
}

/// Scans p = a, a+m, ... below n, starting at the first such p >= p_from,
/// and returns the first p with p and n - p both prime.
template <PrimalityOracle Oracle>
std::optional<PartitionWitness> find_witness_from(std::uint64_t n, const AdmissiblePair& pair,
                                                  const Oracle& oracle, std::uint64_t p_from) {
  detail::check_witness_request(n, pair);
  const std::uint64_t m = pair.m();
  std::uint64_t p = pair.a();
  if (p_from > p) p += (p_from - p + m - 1) / m * m;
  for (; p + 2 <= n; p += m) {
    if (oracle(p) && oracle(n - p)) return PartitionWitness{n, p, n - p};
  }
  return std::nullopt;
}

/// Representation n = p + q with p = a, q = b (mod m) and p minimal, if any.
/// Throws ContractViolation unless n >= 2 is even and n = a + b (mod m).
template <PrimalityOracle Oracle>
std::optional<PartitionWitness> find_witness(std::uint64_t n, const AdmissiblePair& pair,
                                             const Oracle& oracle) {
  return find_witness_from(n, pair, oracle, 0);
}

/// Same, with the deterministic Miller-Rabin test as oracle.
std::optional<PartitionWitness> find_witness(std::uint64_t n, const AdmissiblePair& pair);

/// Two-stage computation of E_{a,b,m} up to N.
///
/// Stage 1 forms the sumset of P = {p = a mod m, p <= M} and
/// Q = {q = b mod m, q <= N} over the progression index space. Stage 2 runs a
/// witness search (Miller-Rabin on n - p) for every unmarked candidate that
/// could still have a partner p > M. `table` must cover N.
ExceptionalSet exceptional_set(const PrimeTable& table, const AdmissiblePair& pair,
                               std::uint64_t limit, const SearchConfig& config = {});

/// Convenience overload that sieves its own table.
ExceptionalSet exceptional_set(const AdmissiblePair& pair, std::uint64_t limit,
                               const SearchConfig& config = {});

using ExceptionalSetMap = std::map<AdmissiblePair, ExceptionalSet>;

/// One entry per ordered admissible pair for m. Each unordered pair is
/// computed once; the mirrored entry copies elements and stage diagnostics.
/// Odd m is rejected (use 2m: the classes coincide).
ExceptionalSetMap exceptional_sets_for_modulus(const PrimeTable& table, std::uint64_t m,
                                               std::uint64_t limit, const SearchConfig& config = {});

ExceptionalSetMap exceptional_sets_for_modulus(std::uint64_t m, std::uint64_t limit,
                                               const SearchConfig& config = {});

void require_even_modulus(std::uint64_t m);

/// Stage-1 survivors (unmarked candidates that turned out representable)
/// for one modulus, counted three ways. The P/Q roles make the counts for
/// (a, b) and (b, a) differ, so every ordered pair is run separately here.
struct SurvivorCensus {
  std::uint64_t m = 0;
  std::uint64_t limit = 0;
  std::uint64_t stage1_bound = 0;
  std::uint64_t ordered_incidents = 0;    // sum over all ordered (a, b)
  std::uint64_t distinct_n = 0;           // |union of survivor values|
  std::uint64_t unordered_incidents = 0;  // sum over a <= b only
};

SurvivorCensus stage1_survivor_census(const PrimeTable& table, std::uint64_t m, std::uint64_t limit,
                                      const SearchConfig& config = {});

/// Runs fn(i) for i in [0, count) on up to `threads` workers (0 = auto).
/// fn must only write to slot i of caller-owned storage.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn);

}  // namespace goldbach

#include "goldbach/detail/parallel.hpp"
