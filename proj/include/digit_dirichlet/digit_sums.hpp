#ifndef DIGIT_DIRICHLET_DIGIT_SUMS_HPP
#define DIGIT_DIRICHLET_DIGIT_SUMS_HPP

#include <cstdint>
#include <vector>

#include "digit_dirichlet/errors.hpp"

namespace digit_dirichlet {

/// Largest n the exact digit arithmetic accepts (keeps every intermediate
/// inside the integer-exact range of the 64-bit paths).
inline constexpr std::int64_t kMaxDigitArgument = std::int64_t{1} << 53;

/// Base-b expansion of n: digits[i] is the coefficient of b^i.
struct DigitExpansion {
  std::int64_t base = 2;
  std::vector<int> digits;
  std::int64_t value = 0;
};

DigitExpansion digit_expansion(std::int64_t b, std::int64_t n);

/// d_b(n): sum of base-b digits; d_b(0) = 0.
std::int64_t digit_sum(std::int64_t b, std::int64_t n);

/// S_b(n) = sum_{m=1}^{n-1} d_b(m); S_b(1) = 0. Served from a per-base
/// running-sum cache, so oracle loops over n are O(1) amortized.
std::int64_t cumulative_digit_sum(std::int64_t b, std::int64_t n);

/// d_b(n) - d_b(n-1) = 1 - k(b-1) with b^k the largest power dividing n.
std::int64_t differenced_digit_sum(std::int64_t b, std::int64_t n);

/// p(y) = sum_n (d_b(n)-d_b(n-1)) y^n evaluated through the Lambert-type
/// closed form y/(1-y) - (b-1) sum_k y^{b^k}/(1-y^{b^k}).
double p_lambert(std::int64_t b, double y);

/// p(e^{-x}) for x > 0, with the 1 - e^{-u} factors computed by expm1 so
/// nothing cancels as x -> 0. This is the form the remainder integrands use.
double p_lambert_exp(std::int64_t b, double x);

}  // namespace digit_dirichlet

#endif
