#ifndef DIGIT_DIRICHLET_DELANGE_HPP
#define DIGIT_DIRICHLET_DELANGE_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "digit_dirichlet/special_functions.hpp"

namespace digit_dirichlet {

/// Real base parameter for the Delange interpolation. Construction refuses
/// beta < 1 + 1e-6: the coefficients contain (beta-1)/log(beta) and zeta at
/// heights 2*pi*k/log(beta), both of which blow up as beta -> 1+.
struct BetaParam {
  explicit BetaParam(double value);
  double beta;
  double log_beta;
};

/// Symmetric Fourier cutoff |k| <= cutoff_K for h_beta.
struct FourierTruncation {
  int cutoff_K = 1000;
};

/// One Fourier coefficient c_beta(k) of the periodic term h_beta.
struct DelangeCoefficient {
  int k = 0;
  Complex value{};
};

/// c_beta(k); exact formula with zeta on the imaginary axis, cached per
/// (beta, k). c_beta(-k) = conj(c_beta(k)).
DelangeCoefficient delange_coefficient(const BetaParam& beta, int k);

/// h_beta(x): real part of the symmetric partial sum over |k| <= cutoff.
/// Pairs (+k, -k) are combined before accumulating, which makes the
/// imaginary residue pure rounding; it is checked against 1e-10 and
/// discarded. Periodic with period 1 by argument reduction.
double h_beta(const BetaParam& beta, double x, const FourierTruncation& trunc = {});

/// S_beta(n) = (beta-1)/(2 log beta) n log n + h_beta(log n / log beta) n.
double s_beta(const BetaParam& beta, std::int64_t n,
              const FourierTruncation& trunc = {});

/// d_beta(n) = S_beta(n+1) - S_beta(n).
double d_beta(const BetaParam& beta, std::int64_t n,
              const FourierTruncation& trunc = {});

/// Envelope estimate of sum_{|k| > K} |c_beta(k)| from the k^{-3/2} decay,
/// fitted at k = 10. Drives the reported tail bounds.
double fourier_tail_bound(const BetaParam& beta, int cutoff_K);

/// CSV rows for the beta-sweep figure grids; figure = 1 emits S_beta(10),
/// 2 emits h_beta(2), 3 emits h_beta(log 2 / log beta).
struct GridRow {
  double beta = 0.0;
  double value = 0.0;
  double tail_bound = 0.0;
};
std::vector<GridRow> figure_grid(int figure, double beta_min, double beta_max,
                                 double step, const FourierTruncation& trunc = {});
void write_grid_csv(std::ostream& os, const std::vector<GridRow>& rows);

}  // namespace digit_dirichlet

#endif
