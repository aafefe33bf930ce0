#pragma once

// Brute-force reference implementations. Nothing here calls into the library.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

inline bool trial_division(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> primes_upto(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (trial_division(n)) out.push_back(n);
  }
  return out;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return b == 0 ? a : gcd(b, a % b); }

/// E_{a,b,m} up to limit by a double loop over all prime pairs p + q <= limit.
inline std::vector<std::uint64_t> naive_exceptional_set(std::uint64_t a, std::uint64_t b, std::uint64_t m,
                                                        std::uint64_t limit) {
  const auto primes = primes_upto(limit);
  std::vector<char> hit(limit + 1, 0);
  for (auto p : primes) {
    if (p % m != a) continue;
    for (auto q : primes) {
      if (p + q > limit) break;
      if (q % m == b) hit[p + q] = 1;
    }
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; n += 2) {
    if (n % m == (a + b) % m && !hit[n]) out.push_back(n);
  }
  return out;
}

/// Number of set partitions of {0..k-1} into exactly r blocks, by explicit
/// enumeration of restricted growth strings.
inline std::uint64_t enumerate_set_partitions(unsigned k, unsigned r) {
  if (k == 0) return r == 0 ? 1 : 0;
  std::vector<unsigned> rgs(k, 0);
  std::uint64_t count = 0;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned blocks) {
    if (i == k) {
      if (blocks == r) ++count;
      return;
    }
    for (unsigned v = 0; v <= blocks && v < r; ++v) {
      rgs[i] = v;
      rec(i + 1, v == blocks ? blocks + 1 : blocks);
    }
  };
  rec(0, 0);
  return count;
}

/// Bell numbers B_0..B_n from the Bell triangle.
inline std::vector<std::uint64_t> bell_numbers(unsigned n) {
  std::vector<std::uint64_t> bell{1};
  std::vector<std::uint64_t> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    bell.push_back(next.front());
    row = next;
  }
  return bell;
}

/// P(W_r > k) by enumerating all r^k draw sequences (small cases only).
inline double enumerate_coupon_tail(unsigned r, unsigned k) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < k; ++i) total *= r;
  std::uint64_t incomplete = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::set<unsigned> seen;
    std::uint64_t c = code;
    for (unsigned i = 0; i < k; ++i) {
      seen.insert(static_cast<unsigned>(c % r));
      c /= r;
    }
    if (seen.size() < r) ++incomplete;
  }
  return static_cast<double>(incomplete) / static_cast<double>(total);
}

/// Odd n with a representation p + q + r, p = q = 2 (mod 3), by triple loop.
inline std::set<std::uint64_t> ternary_representable(std::uint64_t limit) {
  const auto primes = primes_upto(limit);
  std::vector<std::uint64_t> two_mod_three;
  for (auto p : primes) {
    if (p % 3 == 2) two_mod_three.push_back(p);
  }
  std::vector<char> pair_sum(limit + 1, 0);
  for (auto p : two_mod_three) {
    for (auto q : two_mod_three) {
      if (p + q > limit) break;
      pair_sum[p + q] = 1;
    }
  }
  std::set<std::uint64_t> out;
  for (std::uint64_t s = 0; s <= limit; ++s) {
    if (!pair_sum[s]) continue;
    for (auto r : primes) {
      if (s + r > limit) break;
      if ((s + r) % 2 == 1) out.insert(s + r);
    }
  }
  return out;
}

}  // namespace oracle
