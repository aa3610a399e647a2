#include "digit_dirichlet/delange.hpp"

#include <cmath>
#include <random>

#include "digit_dirichlet/digit_sums.hpp"
#include "test_helpers.hpp"

using namespace digit_dirichlet;

TEST_SUITE_BEGIN("delange");

TEST_CASE("c_beta(0) closed form") {
  BetaParam b2(2.0);
  double expected = (1.0 / (2.0 * std::log(2.0))) * (constants::log_two_pi - 1.0) -
                    0.75;
  CHECK_CLOSE(delange_coefficient(b2, 0).value, Complex(expected, 0.0), 1e-14);
  CHECK(std::abs(expected - (-0.1456)) < 1e-4);  // the familiar numeric value
}

TEST_CASE("coefficient conjugation and caching") {
  BetaParam beta(3.7);
  for (int k : {1, 2, 5, 40}) {
    auto plus = delange_coefficient(beta, k);
    auto minus = delange_coefficient(beta, -k);
    CHECK(minus.value == std::conj(plus.value));
  }
}

TEST_CASE("coefficient decay envelope |c(k)| <= C k^{-1.4}") {
  // C is fitted at k = 10 with 3x headroom: zeta on the imaginary axis
  // fluctuates by about a factor of two between sample heights, so a
  // single-point fit is not an envelope on its own. The content under test
  // is the -1.4 decay exponent over the full range k <= 10^4.
  BetaParam beta(2.5);
  double c10 = std::abs(delange_coefficient(beta, 10).value);
  double envelope = 3.0 * c10 * std::pow(10.0, 1.4);
  for (int k = 1; k <= 10000; ++k) {
    double mag = std::abs(delange_coefficient(beta, k).value);
    CHECK(mag <= envelope * std::pow(double(k), -1.4) + 1e-12);
  }
}

TEST_CASE("h_beta is periodic bit-exactly and real") {
  BetaParam beta(2.0);
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> xs(-3.0, 3.0);
  FourierTruncation trunc{500};
  for (int i = 0; i < 20; ++i) {
    double x = xs(rng);
    CHECK(h_beta(beta, x, trunc) == h_beta(beta, x + 1.0, trunc));
  }
}

TEST_CASE("h_b(0) nearly vanishes at integer bases") {
  FourierTruncation trunc{1000};
  for (double b : {2.0, 3.0, 10.0}) {
    double h0 = h_beta(BetaParam(b), 0.0, trunc);
    CHECK(std::abs(h0) < 0.02);
  }
}

TEST_CASE("h_2 is non-constant over a grid") {
  BetaParam beta(2.0);
  FourierTruncation trunc{800};
  double lo = 1e9;
  double hi = -1e9;
  for (int i = 0; i < 1000; ++i) {
    double v = h_beta(beta, i / 1000.0, trunc);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CHECK(hi - lo > 1e-3);
  CHECK(hi - lo < 1.0);
}

TEST_CASE("s_beta reproduces the exact integer S_b within the Fourier tail") {
  FourierTruncation trunc{1000};
  for (double bd : {2.0, 3.0, 10.0}) {
    BetaParam beta(bd);
    std::int64_t b = static_cast<std::int64_t>(bd);
    double worst = 0.0;
    for (std::int64_t n = 1; n <= 1000; ++n) {
      double approx = s_beta(beta, n, trunc);
      double exact = double(cumulative_digit_sum(b, n));
      worst = std::max(worst, std::abs(approx - exact) / double(n));
    }
    CHECK(worst < 0.05);
  }
}

TEST_CASE("c_2(0) agrees with the empirical mean of the periodic term") {
  // Mean over n <= 10^5 of S_2(n)/n - log(n)/(2 log 2); the n-uniform
  // weighting tilts it a few thousandths away from the x-uniform mean c(0).
  double acc = 0.0;
  const std::int64_t N = 100000;
  for (std::int64_t n = 1; n <= N; ++n) {
    acc += double(cumulative_digit_sum(2, n)) / double(n) -
           std::log(double(n)) / (2.0 * std::log(2.0));
  }
  double mean = acc / double(N);
  double c0 = delange_coefficient(BetaParam(2.0), 0).value.real();
  CHECK(std::abs(mean - c0) < 0.01);
}

TEST_CASE("S_beta(10) is nearly constant between beta = 10 and beta = 14") {
  FourierTruncation trunc{1000};
  double s10 = s_beta(BetaParam(10.0), 10, trunc);
  double s14 = s_beta(BetaParam(14.0), 10, trunc);
  CHECK(std::abs(s10 - s14) < 0.5);
}

TEST_CASE("integer-base deviation shrinks as the cutoff grows") {
  // max_n |s_beta - S_b|/n over n <= 1000 through K = 250, 1000, 4000;
  // monotone within 10% noise.
  for (double bd : {2.0, 3.0, 5.0, 10.0}) {
    BetaParam beta(bd);
    std::int64_t b = std::int64_t(bd);
    double dev[3] = {0.0, 0.0, 0.0};
    const int cuts[3] = {250, 1000, 4000};
    for (int ci = 0; ci < 3; ++ci) {
      for (std::int64_t n = 1; n <= 1000; ++n) {
        double exact = double(cumulative_digit_sum(b, n));
        dev[ci] = std::max(dev[ci],
                           std::abs(s_beta(beta, n, {cuts[ci]}) - exact) / double(n));
      }
    }
    CAPTURE(bd);
    CHECK(dev[1] <= dev[0] * 1.1);
    CHECK(dev[2] <= dev[1] * 1.1);
  }
}

TEST_CASE("s_beta(1) = h_beta(0)") {
  BetaParam beta(2.7);
  FourierTruncation trunc{300};
  CHECK(s_beta(beta, 1, trunc) == doctest::Approx(h_beta(beta, 0.0, trunc)));
}

TEST_CASE("d_beta telescopes back to s_beta") {
  BetaParam beta(2.5);
  FourierTruncation trunc{400};
  double acc = 0.0;
  for (std::int64_t m = 1; m < 60; ++m) acc += d_beta(beta, m, trunc);
  CHECK(std::abs(acc - (s_beta(beta, 60, trunc) - s_beta(beta, 1, trunc))) <
        1e-9);
}

TEST_CASE("d_beta sign scan at beta = 2.5 (recorded observation)") {
  // The paper makes no positivity claim for d_beta, so the scan records the
  // observed behavior instead of asserting a sign pattern. At K = 1000 the
  // minimum over n <= 100 measures ~1.0684 (stable against K = 4000 and
  // 16000); frozen here as a regression band.
  BetaParam beta(2.5);
  FourierTruncation trunc{1000};
  int negatives = 0;
  double minimum = 1e9;
  for (std::int64_t n = 1; n <= 100; ++n) {
    double d = d_beta(beta, n, trunc);
    if (d < 0.0) ++negatives;
    minimum = std::min(minimum, d);
  }
  CHECK(negatives == 0);
  CHECK(minimum > 1.0);
  CHECK(minimum < 1.15);
}

TEST_CASE("d_beta tracks the integer digit sum at beta = 2") {
  // Measured worst deviation over n <= 500 at K = 1000 is 0.1011 (at
  // n = 448); the band is frozen just above it.
  BetaParam beta(2.0);
  FourierTruncation trunc{1000};
  for (std::int64_t n = 1; n <= 500; ++n) {
    CHECK(std::abs(d_beta(beta, n, trunc) - double(digit_sum(2, n))) < 0.12);
  }
}

TEST_CASE("beta guard refuses the blowup region") {
  CHECK_THROWS_AS(BetaParam(1.0), OutOfDomain);
  CHECK_THROWS_AS(BetaParam(1.0000005), OutOfDomain);
  CHECK_NOTHROW(BetaParam(1.01));
}

TEST_CASE("figure grids emit finite real values") {
  FourierTruncation trunc{120};
  auto rows = figure_grid(2, 1.2, 2.0, 0.05, trunc);
  CHECK(rows.size() == 17);
  for (const auto& row : rows) {
    CHECK(std::isfinite(row.value));
    CHECK(row.tail_bound >= 0.0);
  }
}

TEST_CASE("figure-1 grid row at the integer base matches exact S_2(10)") {
  // S_2(10) = sum of d_2(m) for m = 1..9 = 1+1+2+1+2+2+3+1+2 = 15, checked
  // against the exact digit oracle rather than trusted.
  CHECK(cumulative_digit_sum(2, 10) == 15);
  FourierTruncation trunc{1000};
  auto rows = figure_grid(1, 2.0, 2.0, 0.01, trunc);
  REQUIRE(rows.size() == 1);
  CHECK(std::abs(rows[0].value - 15.0) <= rows[0].tail_bound);
}

TEST_SUITE_END();
