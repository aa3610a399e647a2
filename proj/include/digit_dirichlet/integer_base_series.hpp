#ifndef DIGIT_DIRICHLET_INTEGER_BASE_SERIES_HPP
#define DIGIT_DIRICHLET_INTEGER_BASE_SERIES_HPP

#include <cstdint>

#include "digit_dirichlet/numerics.hpp"
#include "digit_dirichlet/special_functions.hpp"

namespace digit_dirichlet {

/// Which digit-sum Dirichlet series is meant.
enum class SeriesTag { Zb, Fb, Gb };

const char* to_string(SeriesTag tag);
SeriesTag series_tag_from_string(const std::string& name);

/// Vertical pole spacing 2*pi / log b.
double lattice_spacing(std::int64_t b);

/// Distance from s to the nearest pole of the tagged series.
double pole_distance(SeriesTag tag, std::int64_t b, Complex s);

/// Evaluation refuses points this close to a pole (contour work needs clean
/// analyticity, not near-pole values).
inline constexpr double kPoleGuard = 1e-6;

/// Z_b(s) = (b^s - b)/(b^s - 1) * zeta(s) with the removable point at s = 1
/// handled by a local expansion. Throws PoleAt on the lattice 2*pi*i*m/log b.
Complex zb_eval(std::int64_t b, Complex s, const PrecisionProfile& profile = {});
SfResult zb_eval_detailed(std::int64_t b, Complex s,
                          const PrecisionProfile& profile = {});

/// Default Bernoulli truncation order for a target point (rounded up to
/// even, capped at kMaxTruncation).
int default_truncation(SeriesTag tag, Complex s);
inline constexpr int kMaxTruncation = 40;

/// F_b(s) = sum d_b(n) n^{-s} on its meromorphic continuation: the
/// K-truncated Bernoulli expansion plus a numerically integrated remainder.
/// Valid for Re(s) > 1 - K + 0.05.
EvalResult fb_eval(std::int64_t b, Complex s, int K, double tol);

/// G_b(s) = sum S_b(n) n^{-s}, same scheme; valid for Re(s) > 2 - K + 0.05,
/// K >= 2.
EvalResult gb_eval(std::int64_t b, Complex s, int K, double tol);

}  // namespace digit_dirichlet

#endif
