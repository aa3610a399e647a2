#ifndef DIGIT_DIRICHLET_NUMERICS_HPP
#define DIGIT_DIRICHLET_NUMERICS_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "digit_dirichlet/errors.hpp"

namespace digit_dirichlet {

struct QuadratureResult {
  Complex value{};
  double abs_error_estimate = 0.0;
  long evaluation_count = 0;
};

/// Circle for contour extraction of Laurent coefficients. The caller is
/// responsible for picking a radius whose closed disc isolates the intended
/// singularity (the pole catalog knows the spacings).
struct ContourSpec {
  Complex center{};
  double radius = 0.5;
  int node_count = 64;  // power of two, >= 32
};

/// Truncated Dirichlet sum result (also reused by the series evaluators).
struct EvalResult {
  Complex value{};
  double abs_error_estimate = 0.0;
  std::int64_t k_used = 0;
  std::optional<QuadratureResult> quadrature;
};

using Integrand = std::function<Complex(double)>;

/// Integral over (0, infinity): tanh-sinh on (0, 1] (handles algebraic
/// endpoint behavior x^a, a > -1), then adaptive Gauss-Kronrod on geometric
/// panels [1,2], [2,4], ... until a panel contributes less than tol/10.
QuadratureResult integrate_zero_to_infinity(const Integrand& f, double tol);

/// Same scheme on (x_min, infinity); the beta-series remainder uses this
/// with an explicit accounting of the discarded (0, x_min) mass.
QuadratureResult integrate_with_lower_cutoff(const Integrand& f, double x_min,
                                             double tol);

/// Laurent coefficient a_{-j} of f about spec.center via the trapezoid rule
/// on the circle (spectrally accurate for f analytic on the contour).
/// j = 1 is the residue; j = 0 picks out the constant term a_0.
Complex laurent_coefficient(const std::function<Complex(Complex)>& f,
                            const ContourSpec& spec, int j);

/// Compensated truncated Dirichlet sum  sum_{n=1}^{N} coeff(n) n^{-s}, with
/// the caller-supplied rigorous tail bound reported as the error estimate.
/// sigma_a is the abscissa of absolute convergence the caller asserts.
EvalResult direct_dirichlet_sum(const std::function<double(std::int64_t)>& coeff,
                                Complex s, std::int64_t N, double sigma_a,
                                const std::function<double(std::int64_t)>& tail_bound);

}  // namespace digit_dirichlet

#endif
