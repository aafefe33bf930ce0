#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace goldbach {

/// Witnesses for the deterministic Miller-Rabin test: the first thirteen
/// primes. This base set has no strong pseudoprime below 3.3e24, which
/// covers every 64-bit input.
inline constexpr std::array<std::uint64_t, 13> kMillerRabinWitnesses = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

/// Default number of odd entries sieved per segment.
inline constexpr std::size_t kDefaultSegmentSize = std::size_t{1} << 20;

/// Default cap on the bit-packed table size (1 GiB, i.e. limits up to ~1.7e10).
inline constexpr std::size_t kDefaultSieveMemoryBudget = std::size_t{1} << 30;

struct SieveOptions {
  std::size_t segment_size = kDefaultSegmentSize;
  std::size_t memory_budget_bytes = kDefaultSieveMemoryBudget;
};

/// Exact primality over [0, limit], stored as one bit per odd number.
/// Immutable after construction; safe to share between threads.
class PrimeTable {
 public:
  PrimeTable() = default;

  std::uint64_t limit() const { return limit_; }
  std::uint64_t count() const { return count_; }

  /// False for n > limit(); callers that need a total answer use is_prime().
  bool contains(std::uint64_t n) const {
    if (n > limit_ || n < 2) return false;
    if ((n & 1) == 0) return n == 2;
    const std::uint64_t bit = n >> 1;
    return (bits_[bit >> 6] >> (bit & 63)) & 1;
  }

  std::size_t memory_bytes() const { return bits_.size() * sizeof(std::uint64_t); }

 private:
  friend PrimeTable sieve_primes(std::uint64_t limit, const SieveOptions& options);

  std::uint64_t limit_ = 0;
  std::uint64_t count_ = 0;
  // bit k <=> 2k+1 is prime
  std::vector<std::uint64_t> bits_;
};

/// Segmented sieve of Eratosthenes over [2, limit].
/// Throws ContractViolation for limit < 2 and ResourceError when the packed
/// table would exceed options.memory_budget_bytes.
PrimeTable sieve_primes(std::uint64_t limit, const SieveOptions& options = {});

/// Deterministic Miller-Rabin over the full 64-bit range. 0 and 1 are not prime.
bool is_prime(std::uint64_t n);

/// Primes p <= limit with p = a (mod m), ascending.
struct ResidueClassPrimes {
  std::uint64_t a = 0;
  std::uint64_t m = 0;
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;
};

/// Filters the table along the progression a, a+m, a+2m, ...
ResidueClassPrimes primes_in_class(const PrimeTable& table, std::uint64_t a, std::uint64_t m,
                                   std::uint64_t limit);

/// Sieves the progression a + km directly, without a full table. Produces the
/// same list as primes_in_class; kept as an independent route.
ResidueClassPrimes sieve_progression(std::uint64_t a, std::uint64_t m, std::uint64_t limit);

std::uint64_t gcd(std::uint64_t x, std::uint64_t y);

/// Euler's totient.
std::uint64_t totient(std::uint64_t m);

/// Residues 0 < a < m coprime to m, ascending.
std::vector<std::uint64_t> unit_residues(std::uint64_t m);

}  // namespace goldbach
