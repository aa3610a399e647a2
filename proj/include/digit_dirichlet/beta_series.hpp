#ifndef DIGIT_DIRICHLET_BETA_SERIES_HPP
#define DIGIT_DIRICHLET_BETA_SERIES_HPP

#include <cstdint>
#include <vector>

#include "digit_dirichlet/delange.hpp"
#include "digit_dirichlet/numerics.hpp"

namespace digit_dirichlet {

/// Immutable table of S_beta(1..n_max) at a fixed Fourier cutoff; feeds the
/// F_beta remainder integral. Shareable across concurrent evaluations.
class SbetaTable {
 public:
  SbetaTable(BetaParam beta, std::int64_t n_max, FourierTruncation trunc);

  double beta() const { return beta_.beta; }
  const BetaParam& beta_param() const { return beta_; }
  int cutoff_K() const { return trunc_.cutoff_K; }
  std::int64_t n_max() const { return static_cast<std::int64_t>(values_.size()); }
  double at(std::int64_t n) const;  // S_beta(n), 1-based

  /// Empirical fit of S_beta(n) <= C n log n over the table, with a 1.2x
  /// safety factor (the growth estimate comes without constants).
  double growth_constant() const { return growth_constant_; }

 private:
  BetaParam beta_;
  FourierTruncation trunc_;
  std::vector<double> values_;
  double growth_constant_ = 1.0;
};

SbetaTable build_sbeta_table(double beta, std::int64_t n_max,
                             const FourierTruncation& trunc = {});

/// G_beta(s) = -(beta-1)/(2 log beta) zeta'(s-1)
///             + sum_{|k| <= K} c_beta(k) zeta(s - 1 - 2 pi i k / log beta)
/// on Re(s) > 1; poles at 2 + 2 pi i k / log beta.
EvalResult g_beta_eval(double beta, Complex s, const FourierTruncation& trunc = {});

/// F_beta(s) = -S_beta(1)(s+1) + s G_beta(s+1) + R(s) on Re(s) > 0, with
/// R(s) = (1/Gamma(s)) int_0^inf (e^x - 1 - x) p(e^{-x}) x^{s-1} dx and
/// p(y) = sum_{n>=2} S_beta(n) y^n read from the table.
EvalResult f_beta_eval(const SbetaTable& table, Complex s, double tol);

/// Distance to the nearest pole of G_beta (2 + i k v) or F_beta (1 + i k v).
double beta_pole_distance(double beta, Complex s, bool f_series);

}  // namespace digit_dirichlet

#endif
