#include "digit_dirichlet/digit_sums.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "test_helpers.hpp"

using namespace digit_dirichlet;

TEST_SUITE_BEGIN("digit_sums");

TEST_CASE("digit expansions") {
  auto e = digit_expansion(2, 7);
  CHECK(e.digits == std::vector<int>{1, 1, 1});
  CHECK(digit_expansion(10, 1234).digits == std::vector<int>{4, 3, 2, 1});
  CHECK(digit_expansion(5, 24).digits == std::vector<int>{4, 4});
  CHECK_THROWS_AS(digit_expansion(2, 0), InvalidInput);
  CHECK_THROWS_AS(digit_expansion(1, 5), InvalidInput);

  // Round trip: re-evaluating the digits gives n back.
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::int64_t> dist(1, 1'000'000'000);
  for (int i = 0; i < 200; ++i) {
    std::int64_t n = dist(rng);
    std::int64_t b = 2 + (n % 9);
    auto exp = digit_expansion(b, n);
    std::int64_t value = 0;
    for (std::size_t j = exp.digits.size(); j-- > 0;) {
      value = value * b + exp.digits[j];
    }
    CHECK(value == n);
    CHECK(exp.digits.back() != 0);
  }
}

TEST_CASE("digit sums") {
  CHECK(digit_sum(2, 7) == 3);
  CHECK(digit_sum(10, 1234) == 10);
  CHECK(digit_sum(3, 9) == 1);
  CHECK(digit_sum(7, 0) == 0);
}

TEST_CASE("cumulative digit sums") {
  CHECK(cumulative_digit_sum(2, 1) == 0);
  CHECK(cumulative_digit_sum(2, 5) == 5);
  CHECK(cumulative_digit_sum(10, 11) == 46);
  // S_b(n+1) - S_b(n) = d_b(n)
  for (std::int64_t n = 1; n < 500; ++n) {
    CHECK(cumulative_digit_sum(3, n + 1) - cumulative_digit_sum(3, n) ==
          digit_sum(3, n));
  }
}

TEST_CASE("differenced digit sum and telescoping") {
  CHECK(differenced_digit_sum(2, 4) == -1);
  CHECK(differenced_digit_sum(5, 1) == 1);
  CHECK(differenced_digit_sum(3, 9) == -3);
  for (std::int64_t b : {2, 3, 10}) {
    std::int64_t acc = 0;
    for (std::int64_t n = 1; n <= 100000; ++n) {
      acc += differenced_digit_sum(b, n);
      if (n % 9973 == 0 || n == 100000) CHECK(acc == digit_sum(b, n));
    }
  }
}

TEST_CASE("growth bound") {
  for (std::int64_t b : {2, 3, 10}) {
    for (std::int64_t n = 1; n <= 20000; ++n) {
      double bound = (b - 1.0) *
                     (std::floor(std::log(double(n)) / std::log(double(b))) + 1.0);
      CHECK(double(digit_sum(b, n)) <= bound + 1e-9);
    }
  }
}

TEST_CASE("lambert form matches the hand expansion for b = 2") {
  // d_2 differences start 1, 0, 1, -1, so p(y) = y + y^3 - y^4 + ...
  double y = 0.1;
  double lead = y + y * y * y - y * y * y * y;
  CHECK(std::abs(p_lambert(2, y) - lead) < 1e-4);
}

TEST_CASE("lambert form equals the coefficient sum") {
  // Brute-force coefficient oracle at b=2, y=0.5 (spec pins 2000 terms).
  double direct = 0.0;
  for (std::int64_t n = 1; n <= 2000; ++n) {
    direct += double(differenced_digit_sum(2, n)) * std::pow(0.5, double(n));
  }
  CHECK(std::abs(p_lambert(2, 0.5) - direct) < 1e-12);

  std::mt19937 rng(5);
  std::uniform_real_distribution<double> ydist(0.05, 0.9);
  std::uniform_int_distribution<std::int64_t> bdist(2, 10);
  for (int i = 0; i < 50; ++i) {
    std::int64_t b = bdist(rng);
    double y = ydist(rng);
    double sum = 0.0;
    for (std::int64_t n = 1; n <= 500; ++n) {
      sum += double(differenced_digit_sum(b, n)) * std::pow(y, double(n));
    }
    // Tail of the coefficient sum: |coeff| <= 1 + log_b n.
    double tail = 60.0 * std::pow(y, 500.0);
    CHECK(std::abs(p_lambert(b, y) - sum) < 1e-10 + tail);
  }
}

TEST_CASE("lambert form limits and guards") {
  CHECK(p_lambert(2, 1e-8) / 1e-8 == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_THROWS_AS(p_lambert(2, 0.0), OutOfDomain);
  CHECK_THROWS_AS(p_lambert(2, 1.0), OutOfDomain);
  // p(e^{-x}) stays finite and positive-ish into the deep small-x regime.
  double v = p_lambert_exp(2, 1e-12);
  CHECK(std::isfinite(v));
}

TEST_SUITE_END();
