#include "goldbach/heuristics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "goldbach/errors.hpp"
#include "goldbach/partitions.hpp"

namespace goldbach {

std::uint64_t coupon_classes(std::uint64_t m) {
  require_even_modulus(m);
  const std::uint64_t phi = totient(m);
  return 2 * phi * phi / m;
}

CouponModel make_coupon_model(std::uint64_t m) {
  const std::uint64_t r = coupon_classes(m);
  if (r == 0) throw ContractViolation("coupon model for m=" + std::to_string(m) + " has r = 0");
  return CouponModel{m, r, 1.0 - 1.0 / static_cast<double>(r), harmonic_number(r)};
}

double harmonic_number(std::uint64_t r) {
  double h = 0;
  for (std::uint64_t j = r; j >= 1; --j) h += 1.0 / static_cast<double>(j);  // small terms first
  return h;
}

double g2_estimate(std::uint64_t n) {
  if (n < 4 || n % 2 != 0) {
    throw ContractViolation("g2_estimate: n must be even and >= 4, got " + std::to_string(n));
  }
  const double x = static_cast<double>(n);
  const double lg = std::log(x);
  return 2.0 * x / (lg * lg);
}

std::uint64_t g2_exact(std::uint64_t n, const PrimeTable& table) {
  if (n > table.limit()) {
    throw ContractViolation("g2_exact: n=" + std::to_string(n) + " exceeds table limit " +
                            std::to_string(table.limit()));
  }
  if (n % 2 != 0) return 0;
  std::uint64_t count = 0;
  for (std::uint64_t p = 2; p + 2 <= n; ++p) {
    if (table.contains(p) && table.contains(n - p)) ++count;
  }
  return count;
}

BigInt stirling2(std::uint64_t k, std::uint64_t r) {
  if (r > k) return 0;
  if (k == 0) return 1;  // S(0, 0)
  if (r == 0) return 0;
  // row[j] = S(i, j) for j <= r, advanced i = 0 .. k
  std::vector<BigInt> row(r + 1, 0);
  row[0] = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t top = std::min(i, r);
    for (std::uint64_t j = top; j >= 1; --j) row[j] = row[j] * j + row[j - 1];
    row[0] = 0;
  }
  return row[r];
}

double coupon_expected_wait(std::uint64_t r) {
  if (r == 0) throw ContractViolation("coupon_expected_wait: r must be >= 1");
  return static_cast<double>(r) * harmonic_number(r);
}

BigRational coupon_tail_exact(std::uint64_t r, std::uint64_t k) {
  if (r == 0) throw ContractViolation("coupon_tail: r must be >= 1");
  if (k < r) return 1;
  BigInt r_factorial = 1;
  for (std::uint64_t j = 2; j <= r; ++j) r_factorial *= j;
  const BigInt r_pow_k = boost::multiprecision::pow(BigInt(r), static_cast<unsigned>(k));
  return BigRational(1) - BigRational(r_factorial * stirling2(k, r), r_pow_k);
}

double coupon_tail_inclusion_exclusion(std::uint64_t r, std::uint64_t k) {
  if (r == 0) throw ContractViolation("coupon_tail: r must be >= 1");
  if (k == 0) return 1.0;
  // Neumaier summation; terms alternate in sign
  long double sum = 0;
  long double compensation = 0;
  long double binom = 1;  // C(r, j)
  for (std::uint64_t j = 1; j < r; ++j) {
    binom = binom * static_cast<long double>(r - j + 1) / static_cast<long double>(j);
    const long double base = 1.0L - static_cast<long double>(j) / static_cast<long double>(r);
    long double term = binom * std::pow(base, static_cast<long double>(k));
    if (j % 2 == 0) term = -term;
    const long double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term)) {
      compensation += (sum - t) + term;
    } else {
      compensation += (term - t) + sum;
    }
    sum = t;
  }
  const double value = static_cast<double>(sum + compensation);
  return std::clamp(value, 0.0, 1.0);
}

double coupon_tail_occupancy(std::uint64_t r, std::uint64_t k) {
  if (r == 0) throw ContractViolation("coupon_tail: r must be >= 1");
  if (k < r) return 1.0;
  // occupied[j] = P(exactly j boxes hit so far); only j < r is tracked, and the
  // answer is the mass left there, so no subtraction ever happens
  std::vector<long double> occupied(r, 0.0L);
  occupied[0] = 1.0L;
  const long double rr = static_cast<long double>(r);
  for (std::uint64_t draw = 0; draw < k; ++draw) {
    for (std::uint64_t j = std::min<std::uint64_t>(draw + 1, r - 1); j > 0; --j) {
      occupied[j] = occupied[j] * (static_cast<long double>(j) / rr) +
                    occupied[j - 1] * (static_cast<long double>(r - j + 1) / rr);
    }
    occupied[0] = 0.0L;
  }
  long double tail = 0;
  for (auto v : occupied) tail += v;
  return std::clamp(static_cast<double>(tail), 0.0, 1.0);
}

double coupon_tail(std::uint64_t r, std::uint64_t k) {
  if (r == 0) throw ContractViolation("coupon_tail: r must be >= 1");
  if (k < r) return 1.0;
  if (r <= kExactTailMaxClasses && k <= kExactTailMaxDraws) {
    return coupon_tail_exact(r, k).convert_to<double>();
  }
  // The alternating sum is only trusted when no term exceeds 1; otherwise the
  // cancellation would eat the long double mantissa.
  long double binom = 1;
  long double largest = 0;
  for (std::uint64_t j = 1; j < r; ++j) {
    binom = binom * static_cast<long double>(r - j + 1) / static_cast<long double>(j);
    const long double base = 1.0L - static_cast<long double>(j) / static_cast<long double>(r);
    largest = std::max(largest, binom * std::pow(base, static_cast<long double>(k)));
  }
  if (largest <= 1.0L) return coupon_tail_inclusion_exclusion(r, k);
  return coupon_tail_occupancy(r, k);
}

ExpectedLengthEstimate expected_exception_length(std::uint64_t m, std::uint64_t limit) {
  const CouponModel model = make_coupon_model(m);
  if (limit < 10) throw ContractViolation("expected_exception_length: N must be >= 10");
  const double alpha = model.alpha;
  auto term = [alpha](double n) {
    const double lg = std::log(n);
    return std::pow(alpha, 2.0 * n / (lg * lg));
  };

  // Kahan summation over n = 2 .. N
  double sum = 0;
  double c = 0;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    const double y = term(static_cast<double>(n)) - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }

  double tail = 0;
  if (alpha > 0) {
    // 2n/(ln n)^2 is increasing past e^2, so a block [x, 2x) is at most x * term(x)
    double x = static_cast<double>(limit + 1);
    double previous = x * term(x);
    tail = previous;
    for (int j = 0; j < 2000 && previous > 0; ++j) {
      x *= 2;
      const double current = x * term(x);
      tail += current;
      const double ratio = current / previous;
      if (ratio < 0.5) {
        tail += current * ratio / (1 - ratio);
        break;
      }
      previous = current;
    }
  }
  const auto md = static_cast<double>(m);
  return ExpectedLengthEstimate{sum / md, tail / md};
}

BoundPrediction predict_bounds(std::uint64_t m, double c, double delta) {
  if (m < 4) throw ContractViolation("predict_bounds: m must be >= 4, got " + std::to_string(m));
  if (!(c > 0)) throw ContractViolation("predict_bounds: c must be positive");
  if (!(delta > 0 && delta < 1)) throw ContractViolation("predict_bounds: delta must lie in (0, 1)");
  const CouponModel model = make_coupon_model(m);
  const auto md = static_cast<double>(m);
  const double lg = std::log(md);
  return BoundPrediction{m, c * md * md * lg * lg,
                         std::pow(static_cast<double>(model.r), 1.0 / delta) / (2.0 * md)};
}

double simulate_coupon(std::uint64_t r, std::uint64_t k, std::uint64_t trials, std::uint64_t seed) {
  if (r == 0) throw ContractViolation("simulate_coupon: r must be >= 1");
  if (trials == 0) throw ContractViolation("simulate_coupon: trials must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> box(0, r - 1);
  std::vector<char> hit(r);
  std::uint64_t incomplete = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::fill(hit.begin(), hit.end(), 0);
    std::uint64_t filled = 0;
    for (std::uint64_t d = 0; d < k && filled < r; ++d) {
      char& slot = hit[box(rng)];
      if (!slot) {
        slot = 1;
        ++filled;
      }
    }
    if (filled < r) ++incomplete;
  }
  return static_cast<double>(incomplete) / static_cast<double>(trials);
}

}  // namespace goldbach
