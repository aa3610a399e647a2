#ifndef DIGIT_DIRICHLET_SPECIAL_FUNCTIONS_HPP
#define DIGIT_DIRICHLET_SPECIAL_FUNCTIONS_HPP

#include "digit_dirichlet/errors.hpp"
#include "digit_dirichlet/rational.hpp"

namespace digit_dirichlet {

/// Tuning knobs for the zeta engine.
///
/// em_cutoff_N is the minimum direct-sum length; the engine scales it up
/// with |Im(s)| so the Euler-Maclaurin tail stays in its convergent regime.
/// em_order_M is the highest Bernoulli index used in the tail (even).
/// Below reflection_threshold the functional equation is applied.
struct PrecisionProfile {
  double target_abs_tol = 1e-12;
  int em_cutoff_N = 64;
  int em_order_M = 14;
  double reflection_threshold = 0.5;
};

/// Value plus the evaluator's own absolute error estimate.
struct SfResult {
  Complex value;
  double abs_error_estimate = 0.0;
};

/// Exact Bernoulli number B_k under the convention B_1 = -1/2
/// (generating function x/(e^x-1)). Cached; thread-safe.
const Rational& bernoulli_number(int k);

/// B_k / k! as a double, cached. Valid for k <= 200.
double bernoulli_over_factorial(int k);

/// Gamma(s) by Lanczos approximation plus reflection, ~1e-13 relative
/// for |s| <= 100. Throws PoleAt on nonpositive integers.
Complex complex_gamma(Complex s);

/// log Gamma(s) for Re(s) >= 0.5 (principal branch up to 2*pi*i multiples).
Complex log_gamma(Complex s);

/// 1/Gamma(s); entire, returns 0 at the poles of Gamma.
Complex reciprocal_gamma(Complex s);

/// Gamma(s-1+k)/Gamma(s) as a finite product: 1/(s-1) for k=0, 1 for k=1,
/// s(s+1)...(s+k-2) for k >= 2. Never evaluates Gamma itself.
Complex gamma_ratio(Complex s, int k);

/// sin(pi*s) and related helpers with exact argument reduction on Re(s),
/// so values at (near-)integers do not lose digits.
Complex sin_pi(Complex s);

/// Riemann zeta. Euler-Maclaurin for Re(s) >= reflection_threshold, the
/// functional equation (evaluated in log space) otherwise.
Complex riemann_zeta(Complex s, const PrecisionProfile& profile = {});
SfResult riemann_zeta_detailed(Complex s, const PrecisionProfile& profile = {});

/// zeta'(s) by the term-by-term differentiated Euler-Maclaurin formula.
/// Supported for Re(s) > -1/2; the series evaluators only use Re(s) > 0.
Complex riemann_zeta_derivative(Complex s, const PrecisionProfile& profile = {});
SfResult riemann_zeta_derivative_detailed(Complex s,
                                          const PrecisionProfile& profile = {});

namespace constants {
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
inline constexpr double stieltjes_gamma1 = -0.072815845483676724860586;
inline constexpr double log_two_pi = 1.83787706640934548356065947281123527;
}  // namespace constants

}  // namespace digit_dirichlet

#endif
