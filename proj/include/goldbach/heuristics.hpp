#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

#include "goldbach/primes.hpp"

namespace goldbach {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Coupon-collector model for one modulus: r = floor(2 phi(m)^2 / m) equally
/// likely classes for the reduction of (p, q), alpha = 1 - 1/r.
struct CouponModel {
  std::uint64_t m = 0;
  std::uint64_t r = 0;
  double alpha = 0;
  double harmonic_r = 0;
};

/// Throws ContractViolation for odd m or when r would be 0.
CouponModel make_coupon_model(std::uint64_t m);

/// floor(2 phi(m)^2 / m).
std::uint64_t coupon_classes(std::uint64_t m);

/// H_r = 1 + 1/2 + ... + 1/r.
double harmonic_number(std::uint64_t r);

/// Average-case Goldbach count 2n / (ln n)^2 (singular series replaced by its
/// mean 2). Requires even n >= 4.
double g2_estimate(std::uint64_t n);

/// Number of ordered prime pairs (p, q) with p + q = n; 0 for odd n.
/// Requires n <= table.limit().
std::uint64_t g2_exact(std::uint64_t n, const PrimeTable& table);

/// Stirling number of the second kind S(k, r) by the row recurrence
/// S(k, r) = r S(k-1, r) + S(k-1, r-1). Exact for any size.
BigInt stirling2(std::uint64_t k, std::uint64_t r);

/// E[W_r] = r H_r.
double coupon_expected_wait(std::uint64_t r);

/// P(W_r > k) = 1 - r! S(k, r) / r^k as an exact rational.
BigRational coupon_tail_exact(std::uint64_t r, std::uint64_t k);

/// P(W_r > k) by inclusion-exclusion, sum_{j=1}^{r-1} (-1)^{j+1} C(r,j) (1 - j/r)^k,
/// in long double with compensated summation, clamped to [0, 1].
double coupon_tail_inclusion_exclusion(std::uint64_t r, std::uint64_t k);

/// Largest r (resp. k) routed through coupon_tail_exact by coupon_tail.
inline constexpr std::uint64_t kExactTailMaxClasses = 30;
inline constexpr std::uint64_t kExactTailMaxDraws = 500;

/// P(W_r > k) from the distribution of the number of occupied boxes, stepped
/// draw by draw in long double. All terms are nonnegative. O(k r).
double coupon_tail_occupancy(std::uint64_t r, std::uint64_t k);

/// P(W_r > k): exact rational when r <= 30 and k <= 500; otherwise
/// inclusion-exclusion when every term is at most 1 in magnitude, and the
/// occupancy recursion when the alternating sum would cancel badly.
/// Requires r >= 1.
double coupon_tail(std::uint64_t r, std::uint64_t k);

struct ExpectedLengthEstimate {
  double value = 0;       // (1/m) sum_{n=2}^{N} alpha^{2n/(ln n)^2}
  double tail_bound = 0;  // upper bound on (1/m) sum_{n>N}
};

/// Truncated model estimate of E[L(m)]. Requires even m >= 2 with r >= 1 and
/// N >= 10. The tail bound groups n > N into dyadic blocks [2^j N, 2^{j+1} N),
/// bounds each by its length times the value at its left end, and closes the
/// sum with a geometric majorant once block ratios drop below 1/2.
ExpectedLengthEstimate expected_exception_length(std::uint64_t m, std::uint64_t limit);

struct BoundPrediction {
  std::uint64_t m = 0;
  double e_max_bound = 0;      // c m^2 (ln m)^2
  double expected_length = 0;  // r^{1/delta} / (2m)
};

/// Requires m >= 4, c > 0 and 0 < delta < 1. As delta -> 1 the length
/// estimate tends to r / (2m).
BoundPrediction predict_bounds(std::uint64_t m, double c, double delta);

/// Fraction of `trials` runs in which k uniform draws over r boxes leave a box
/// empty. Deterministic in seed (mt19937_64).
double simulate_coupon(std::uint64_t r, std::uint64_t k, std::uint64_t trials, std::uint64_t seed);

}  // namespace goldbach
