#include "doctest.h"

#include <cmath>

#include "goldbach/errors.hpp"
#include "goldbach/heuristics.hpp"
#include "oracles.hpp"

using namespace goldbach;

TEST_SUITE("heuristics") {
  TEST_CASE("coupon model parameters") {
    const auto m10 = make_coupon_model(10);
    CHECK(m10.r == 3);
    CHECK(m10.alpha == doctest::Approx(2.0 / 3.0));
    CHECK(m10.harmonic_r == doctest::Approx(11.0 / 6.0));
    CHECK(coupon_classes(2) == 1);
    CHECK(coupon_classes(4) == 2);
    CHECK(coupon_classes(50) == 16);
    CHECK(coupon_classes(200) == 64);
    CHECK(make_coupon_model(2).alpha == 0.0);
    CHECK_THROWS_AS(make_coupon_model(7), ContractViolation);
    CHECK_THROWS_AS(make_coupon_model(0), ContractViolation);
    for (std::uint64_t m = 2; m <= 400; m += 2) CHECK(coupon_classes(m) >= 1);
  }

  TEST_CASE("harmonic numbers") {
    CHECK(harmonic_number(1) == 1.0);
    CHECK(harmonic_number(3) == doctest::Approx(11.0 / 6.0));
    for (std::uint64_t r = 1; r < 100; ++r) CHECK(harmonic_number(r + 1) > harmonic_number(r));
  }

  TEST_CASE("g2 estimate") {
    CHECK(g2_estimate(54) == doctest::Approx(6.787332993906325).epsilon(1e-12));
    CHECK(g2_estimate(4) == doctest::Approx(4.162737962011216).epsilon(1e-12));
    CHECK(g2_estimate(1'000'000) > g2_estimate(10'000));
    CHECK_THROWS_AS(g2_estimate(2), ContractViolation);
    CHECK_THROWS_AS(g2_estimate(7), ContractViolation);
  }

  TEST_CASE("g2 exact") {
    const auto table = sieve_primes(10'000);
    CHECK(g2_exact(10, table) == 3);
    CHECK(g2_exact(4, table) == 1);
    CHECK(g2_exact(3, table) == 0);
    CHECK(g2_exact(2, table) == 0);
    CHECK(g2_exact(100, table) == 12);
    CHECK_THROWS_AS(g2_exact(10'002, table), ContractViolation);
    const auto primes = oracle::primes_upto(2000);
    for (std::uint64_t n = 4; n <= 2000; n += 2) {
      std::uint64_t count = 0;
      for (auto p : primes) {
        if (p >= n) break;
        count += oracle::trial_division(n - p);
      }
      REQUIRE_MESSAGE(g2_exact(n, table) == count, "n = " << n);
    }
  }

  TEST_CASE("g2 ratio is sane on average over [10^4, 10^6]") {
    const auto table = sieve_primes(1'000'000);
    double sum = 0;
    int samples = 0;
    // 400 even n spread evenly over the range.
    for (std::uint64_t i = 0; i < 400; ++i) {
      const std::uint64_t n = 10'000 + 2 * (i * (990'000 / 2) / 399);
      sum += static_cast<double>(g2_exact(n, table)) / g2_estimate(n);
      ++samples;
    }
    const double mean = sum / samples;
    CHECK(mean >= 0.8);
    CHECK(mean <= 1.6);
  }

  TEST_CASE("Stirling numbers") {
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(5, 0) == 0);
    CHECK(stirling2(3, 5) == 0);
    CHECK(stirling2(10, 5) == 42525);
    for (std::uint64_t k = 1; k <= 50; ++k) CHECK(stirling2(k, 1) == 1);
    for (std::uint64_t k = 1; k <= 30; ++k) CHECK(stirling2(k, k) == 1);
    // Recurrence.
    for (std::uint64_t k = 1; k <= 40; ++k) {
      for (std::uint64_t r = 1; r <= k; ++r) CHECK(stirling2(k, r) == r * stirling2(k - 1, r) + stirling2(k - 1, r - 1));
    }
    // Enumeration of set partitions.
    for (unsigned k = 0; k <= 9; ++k) {
      for (unsigned r = 0; r <= k; ++r) CHECK(stirling2(k, r) == oracle::enumerate_set_partitions(k, r));
    }
    // Row sums are Bell numbers.
    const auto bell = oracle::bell_numbers(15);
    for (unsigned k = 0; k <= 15; ++k) {
      BigInt row = 0;
      for (unsigned r = 0; r <= k; ++r) row += stirling2(k, r);
      CHECK(row == bell[k]);
    }
    // Beyond 64 bits: S(200, 100) has well over 20 digits.
    CHECK(stirling2(200, 100) > BigInt(std::numeric_limits<std::uint64_t>::max()));
  }

  TEST_CASE("expected wait") {
    CHECK(coupon_expected_wait(1) == 1.0);
    CHECK(coupon_expected_wait(2) == doctest::Approx(3.0));
    CHECK(coupon_expected_wait(3) == doctest::Approx(5.5));
    CHECK_THROWS_AS(coupon_expected_wait(0), ContractViolation);
  }

  TEST_CASE("coupon tail examples") {
    for (std::uint64_t r = 1; r <= 20; ++r) {
      for (std::uint64_t k = 0; k < r; ++k) CHECK(coupon_tail(r, k) == 1.0);
    }
    CHECK(coupon_tail(2, 2) == doctest::Approx(0.5));
    CHECK(coupon_tail(1, 1) == 0.0);
    CHECK(coupon_tail_exact(2, 2) == BigRational(1, 2));
    CHECK(coupon_tail_exact(3, 3) == BigRational(7, 9));
    CHECK(coupon_tail_inclusion_exclusion(5, 0) == 1.0);
    CHECK_THROWS_AS(coupon_tail(0, 3), ContractViolation);
  }

  TEST_CASE("coupon tail against enumeration of draw sequences") {
    for (unsigned r = 1; r <= 4; ++r) {
      for (unsigned k = 0; k <= 8; ++k) {
        CHECK(coupon_tail(r, k) == doctest::Approx(oracle::enumerate_coupon_tail(r, k)).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("closed form and inclusion-exclusion agree") {
    for (std::uint64_t r = 1; r <= 12; ++r) {
      for (std::uint64_t k = 0; k <= 60; ++k) {
        const double exact = coupon_tail_exact(r, k).convert_to<double>();
        REQUIRE(std::abs(exact - coupon_tail_inclusion_exclusion(r, k)) < 1e-9);
      }
    }
    // Large r is routed through inclusion-exclusion.
    CHECK(coupon_tail(64, 400) == doctest::Approx(coupon_tail_inclusion_exclusion(64, 400)));
    CHECK(coupon_tail(30, 500) == doctest::Approx(coupon_tail_inclusion_exclusion(30, 500)).epsilon(1e-9));
  }

  TEST_CASE("occupancy recursion agrees with the exact tail") {
    for (std::uint64_t r = 1; r <= 12; ++r) {
      for (std::uint64_t k = 0; k <= 60; ++k) {
        const double exact = coupon_tail_exact(r, k).convert_to<double>();
        REQUIRE(std::abs(exact - coupon_tail_occupancy(r, k)) < 1e-12);
      }
    }
    // Large r with k near r log r, where the alternating sum cancels badly.
    for (auto [r, k] : {std::pair<std::uint64_t, std::uint64_t>{40, 60}, {40, 150}, {64, 100}, {64, 300}, {80, 400}}) {
      const double exact = coupon_tail_exact(r, k).convert_to<double>();
      CHECK(coupon_tail(r, k) == doctest::Approx(exact).epsilon(1e-10));
      CHECK(coupon_tail_occupancy(r, k) == doctest::Approx(exact).epsilon(1e-10));
    }
    // Deep in the tail, relative accuracy is kept.
    const double deep = coupon_tail_exact(64, 2000).convert_to<double>();
    CHECK(deep < 1e-10);
    CHECK(coupon_tail(64, 2000) == doctest::Approx(deep).epsilon(1e-9));
    CHECK(coupon_tail_occupancy(64, 2000) == doctest::Approx(deep).epsilon(1e-9));
  }

  TEST_CASE("tail sum equals the expected wait") {
    for (std::uint64_t r = 1; r <= 10; ++r) {
      double sum = 0;
      for (std::uint64_t k = 0; k < 2000; ++k) sum += coupon_tail(r, k);
      CHECK(std::abs(sum - coupon_expected_wait(r)) < 1e-6);
    }
  }

  TEST_CASE("tail monotonicity") {
    for (std::uint64_t r = 1; r <= 25; ++r) {
      for (std::uint64_t k = 0; k < 150; ++k) {
        REQUIRE(coupon_tail(r, k + 1) <= coupon_tail(r, k));
        if (k >= r + 1) REQUIRE(coupon_tail(r + 1, k) >= coupon_tail(r, k));
      }
    }
    for (std::uint64_t r : {40, 80}) {
      for (std::uint64_t k = 0; k < 2000; k += 7) {
        const double t = coupon_tail(r, k);
        CHECK(t >= 0.0);
        CHECK(t <= 1.0);
        CHECK(coupon_tail(r, k + 7) <= t + 1e-12);
      }
    }
  }

  TEST_CASE("Monte Carlo agreement") {
    CHECK(simulate_coupon(1, 5, 1000, 1) == 0.0);
    CHECK(simulate_coupon(3, 2, 1000, 1) == 1.0);
    const std::uint64_t trials = 100'000;
    const double half = simulate_coupon(2, 2, trials, 99);
    CHECK(std::abs(half - 0.5) < 0.005);
    for (auto [r, k] : {std::pair<std::uint64_t, std::uint64_t>{5, 20}, {5, 10}, {8, 25}, {12, 40}, {3, 4}}) {
      const double p = coupon_tail(r, k);
      const double sigma = std::sqrt(p * (1 - p) / trials);
      CHECK(std::abs(simulate_coupon(r, k, trials, 4242) - p) < 3 * sigma);
    }
    CHECK(simulate_coupon(6, 12, 5000, 17) == simulate_coupon(6, 12, 5000, 17));
  }

  TEST_CASE("expected exception length brackets the untruncated sum") {
    // Reference values: the same sum carried to convergence in double precision.
    const std::pair<std::uint64_t, double> reference[] = {
        {10, 0.99122997219377041}, {30, 0.72815659354814612}, {50, 5.8046634930513374}, {200, 10.406421313118350}};
    for (auto [m, full] : reference) {
      CAPTURE(m);
      const auto est = expected_exception_length(m, 1'000'000);
      CHECK(est.value <= full * (1 + 1e-12));
      CHECK(est.value + est.tail_bound >= full * (1 - 1e-12));
      CHECK(est.value == doctest::Approx(full).epsilon(1e-6));
    }
  }

  TEST_CASE("expected exception length truncation bound") {
    for (std::uint64_t m : {10, 50, 120, 200}) {
      const auto small = expected_exception_length(m, 100'000);
      const auto large = expected_exception_length(m, 1'000'000);
      CHECK(large.value >= small.value);
      CHECK(large.value - small.value <= small.tail_bound);
      CHECK(large.tail_bound <= small.tail_bound);
    }
    CHECK(expected_exception_length(2, 1000).value == 0.0);
    CHECK_THROWS_AS(expected_exception_length(10, 9), ContractViolation);
    CHECK_THROWS_AS(expected_exception_length(9, 100), ContractViolation);
  }

  TEST_CASE("predicted bounds") {
    const auto b10 = predict_bounds(10, 1.0, 0.5);
    CHECK(b10.e_max_bound == doctest::Approx(530.1898110478398));
    CHECK(b10.expected_length == doctest::Approx(9.0 / 20.0));
    CHECK(predict_bounds(10, 1.0, 0.999999).expected_length == doctest::Approx(3.0 / 20.0).epsilon(1e-5));
    CHECK(predict_bounds(10, 2.0, 0.5).e_max_bound == doctest::Approx(2 * 530.1898110478398));
    for (std::uint64_t m = 4; m < 400; m += 2) {
      const auto here = predict_bounds(m, 1.0, 0.5);
      CHECK(here.e_max_bound > 0);
      CHECK(here.expected_length > 0);
      CHECK(predict_bounds(m + 2, 1.0, 0.5).e_max_bound > here.e_max_bound);
    }
    CHECK_THROWS_AS(predict_bounds(2, 1.0, 0.5), ContractViolation);
    CHECK_THROWS_AS(predict_bounds(10, 0.0, 0.5), ContractViolation);
    CHECK_THROWS_AS(predict_bounds(10, 1.0, 0.0), ContractViolation);
    CHECK_THROWS_AS(predict_bounds(10, 1.0, 1.0), ContractViolation);
    CHECK_THROWS_AS(predict_bounds(10, 1.0, -0.5), ContractViolation);
  }
}
