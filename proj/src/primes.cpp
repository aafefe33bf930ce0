#include "goldbach/primes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "goldbach/errors.hpp"

namespace goldbach {

namespace {

using u128 = unsigned __int128;

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Odd primes up to bound by a plain sieve; seeds the segmented passes.
std::vector<std::uint64_t> small_odd_primes(std::uint64_t bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 3; i <= bound; i += 2) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += 2 * i) composite[j] = true;
  }
  return out;
}

}  // namespace

PrimeTable sieve_primes(std::uint64_t limit, const SieveOptions& options) {
  if (limit < 2) throw ContractViolation("sieve_primes: limit must be >= 2, got " + std::to_string(limit));
  if (options.segment_size == 0) throw ContractViolation("sieve_primes: segment size must be positive");

  // odd numbers 1, 3, ..., <= limit map to bit indices 0 .. (limit - 1) / 2
  const std::uint64_t num_bits = (limit + 1) / 2;
  const std::uint64_t num_words = (num_bits + 63) / 64;
  if (num_words > options.memory_budget_bytes / sizeof(std::uint64_t)) {
    throw ResourceError("sieve_primes: limit " + std::to_string(limit) + " needs " +
                        std::to_string(num_words * sizeof(std::uint64_t)) +
                        " bytes, over the memory budget of " +
                        std::to_string(options.memory_budget_bytes) + " bytes");
  }

  PrimeTable table;
  table.limit_ = limit;
  table.bits_.assign(num_words, 0);

  const std::uint64_t root = isqrt(limit);
  const std::vector<std::uint64_t> base = small_odd_primes(root);
  // next_index[i]: bit index of the next odd multiple of base[i] to strike
  std::vector<std::uint64_t> next_index(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) next_index[i] = (base[i] * base[i]) / 2;

  const std::uint64_t seg = options.segment_size;
  std::vector<std::uint8_t> segment(seg);
  std::uint64_t count = 1;  // the prime 2

  for (std::uint64_t lo = 0; lo < num_bits; lo += seg) {
    const std::uint64_t hi = std::min(lo + seg, num_bits);
    std::fill(segment.begin(), segment.begin() + static_cast<std::ptrdiff_t>(hi - lo), 1);
    if (lo == 0) segment[0] = 0;  // 1 is not prime

    for (std::size_t i = 0; i < base.size(); ++i) {
      std::uint64_t k = next_index[i];
      const std::uint64_t step = base[i];  // consecutive odd multiples differ by 2p, i.e. p bits
      for (; k < hi; k += step) segment[k - lo] = 0;
      next_index[i] = k;
    }

    for (std::uint64_t k = lo; k < hi; ++k) {
      if (segment[k - lo]) {
        table.bits_[k >> 6] |= std::uint64_t{1} << (k & 63);
        ++count;
      }
    }
  }
  table.count_ = count;
  return table;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : kMillerRabinWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 43 * 43) return true;

  const std::uint64_t d_total = n - 1;
  const int s = std::countr_zero(d_total);
  const std::uint64_t d = d_total >> s;

  for (std::uint64_t a : kMillerRabinWitnesses) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

ResidueClassPrimes primes_in_class(const PrimeTable& table, std::uint64_t a, std::uint64_t m,
                                   std::uint64_t limit) {
  if (m == 0 || a >= m) {
    throw ContractViolation("primes_in_class: need 0 <= a < m, got a=" + std::to_string(a) +
                            " m=" + std::to_string(m));
  }
  if (limit > table.limit()) {
    throw ContractViolation("primes_in_class: limit " + std::to_string(limit) +
                            " exceeds table limit " + std::to_string(table.limit()));
  }
  ResidueClassPrimes out{a, m, limit, {}};
  for (std::uint64_t p = a; p <= limit; p += m) {
    if (table.contains(p)) out.primes.push_back(p);
  }
  return out;
}

ResidueClassPrimes sieve_progression(std::uint64_t a, std::uint64_t m, std::uint64_t limit) {
  if (m == 0 || a >= m) {
    throw ContractViolation("sieve_progression: need 0 <= a < m, got a=" + std::to_string(a) +
                            " m=" + std::to_string(m));
  }
  ResidueClassPrimes out{a, m, limit, {}};
  if (limit < a) return out;

  // slot k <=> a + k*m
  const std::uint64_t slots = (limit - a) / m + 1;
  std::vector<bool> alive(slots, true);
  const std::uint64_t root = isqrt(limit);

  std::vector<bool> composite(root + 1, false);
  for (std::uint64_t p = 2; p <= root; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t j = p * p; j <= root; j += p) composite[j] = true;

    const std::uint64_t g = gcd(p, m);
    if (g != 1) {
      // p | m: the whole class is divisible by p iff p | a
      if (a % p == 0) {
        for (std::uint64_t k = 0; k < slots; ++k) {
          if (a + k * m != p) alive[k] = false;
        }
      }
      continue;
    }
    // smallest k with a + k*m = 0 (mod p): k = -a * m^{-1} (mod p)
    const std::uint64_t m_inv = pow_mod(m % p, p - 2, p);
    const std::uint64_t k0 = mul_mod((p - a % p) % p, m_inv, p);
    for (std::uint64_t k = k0; k < slots; k += p) {
      if (a + k * m != p) alive[k] = false;
    }
  }
  for (std::uint64_t k = 0; k < slots; ++k) {
    const std::uint64_t v = a + k * m;
    if (alive[k] && v >= 2) out.primes.push_back(v);
  }
  return out;
}

std::uint64_t gcd(std::uint64_t x, std::uint64_t y) {
  while (y != 0) {
    const std::uint64_t t = x % y;
    x = y;
    y = t;
  }
  return x;
}

std::uint64_t totient(std::uint64_t m) {
  std::uint64_t result = m;
  std::uint64_t rest = m;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

std::vector<std::uint64_t> unit_residues(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 1; a < m; ++a) {
    if (gcd(a, m) == 1) out.push_back(a);
  }
  return out;
}

}  // namespace goldbach
