#include "digit_dirichlet/digit_sums.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace digit_dirichlet {

namespace {

void check_base(std::int64_t b) {
  if (b < 2) throw InvalidInput("digit arithmetic requires base b >= 2");
}

void check_argument(std::int64_t n, std::int64_t minimum) {
  if (n < minimum || n > kMaxDigitArgument) {
    throw InvalidInput("digit arithmetic argument out of range");
  }
}

// Running S_b values per base: cache[n] = S_b(n) for 1 <= n <= built length.
std::mutex g_sb_mutex;
std::map<std::int64_t, std::vector<std::int64_t>> g_sb_cache;

}  // namespace

DigitExpansion digit_expansion(std::int64_t b, std::int64_t n) {
  check_base(b);
  check_argument(n, 1);
  DigitExpansion out;
  out.base = b;
  out.value = n;
  while (n > 0) {
    out.digits.push_back(static_cast<int>(n % b));
    n /= b;
  }
  return out;
}

std::int64_t digit_sum(std::int64_t b, std::int64_t n) {
  check_base(b);
  check_argument(n, 0);
  std::int64_t sum = 0;
  while (n > 0) {
    sum += n % b;
    n /= b;
  }
  return sum;
}

std::int64_t cumulative_digit_sum(std::int64_t b, std::int64_t n) {
  check_base(b);
  check_argument(n, 1);
  std::lock_guard<std::mutex> lock(g_sb_mutex);
  auto& cache = g_sb_cache[b];
  if (cache.empty()) cache = {0, 0};  // cache[1] = S_b(1) = 0
  while (static_cast<std::int64_t>(cache.size()) <= n) {
    std::int64_t m = static_cast<std::int64_t>(cache.size()) - 1;
    cache.push_back(cache.back() + digit_sum(b, m));
  }
  return cache[static_cast<std::size_t>(n)];
}

std::int64_t differenced_digit_sum(std::int64_t b, std::int64_t n) {
  check_base(b);
  check_argument(n, 1);
  std::int64_t k = 0;
  while (n % b == 0) {
    n /= b;
    ++k;
  }
  return 1 - k * (b - 1);
}

double p_lambert_exp(std::int64_t b, double x) {
  check_base(b);
  if (!(x > 0.0)) throw OutOfDomain("p_lambert_exp: requires x > 0");
  // y/(1-y) with y = e^{-x}.
  double value = std::exp(-x) / (-std::expm1(-x));
  // Subtract (b-1) * sum_k y^{b^k}/(1-y^{b^k}); the exponent b^k * x grows
  // geometrically, so ~log(700/x)/log(b) terms suffice.
  double u = x;
  const double bd = static_cast<double>(b);
  for (;;) {
    u *= bd;
    if (u > 700.0) break;
    value -= (bd - 1.0) * std::exp(-u) / (-std::expm1(-u));
  }
  return value;
}

double p_lambert(std::int64_t b, double y) {
  check_base(b);
  if (!(y > 0.0) || !(y < 1.0)) throw OutOfDomain("p_lambert: requires 0 < y < 1");
  return p_lambert_exp(b, -std::log(y));
}

}  // namespace digit_dirichlet
